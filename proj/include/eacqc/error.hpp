/*******************************************************************************
 * Copyright (c) 2026 The eacqc Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eacqc {

enum class ErrorKind {
  NotPrime,
  NotIrreducible,
  FieldTooLarge,
  NoBuiltinModulus,
  FieldMismatch,
  DivisionByZero,
  DimensionMismatch,
  LengthMismatch,
  DistanceUnknown,
  InvalidDistance,
  BudgetInvalid,
  EntanglementFormulaMismatch,
  InvalidParams,
  AlphabetMismatch,
  ProvenanceMismatch,
  TooManyBlocks,
  ParseError,
  DomainError,
  NotSquare,
  BadFamilyParams,
  NoRoot,
  TooLarge,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. The kind name leads the message so
/// command-line callers can surface it verbatim.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace eacqc
