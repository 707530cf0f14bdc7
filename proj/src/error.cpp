/*******************************************************************************
 * Copyright (c) 2026 The eacqc Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "eacqc/error.hpp"

namespace eacqc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::NotPrime:
    return "NotPrime";
  case ErrorKind::NotIrreducible:
    return "NotIrreducible";
  case ErrorKind::FieldTooLarge:
    return "FieldTooLarge";
  case ErrorKind::NoBuiltinModulus:
    return "NoBuiltinModulus";
  case ErrorKind::FieldMismatch:
    return "FieldMismatch";
  case ErrorKind::DivisionByZero:
    return "DivisionByZero";
  case ErrorKind::DimensionMismatch:
    return "DimensionMismatch";
  case ErrorKind::LengthMismatch:
    return "LengthMismatch";
  case ErrorKind::DistanceUnknown:
    return "DistanceUnknown";
  case ErrorKind::InvalidDistance:
    return "InvalidDistance";
  case ErrorKind::BudgetInvalid:
    return "BudgetInvalid";
  case ErrorKind::EntanglementFormulaMismatch:
    return "EntanglementFormulaMismatch";
  case ErrorKind::InvalidParams:
    return "InvalidParams";
  case ErrorKind::AlphabetMismatch:
    return "AlphabetMismatch";
  case ErrorKind::ProvenanceMismatch:
    return "ProvenanceMismatch";
  case ErrorKind::TooManyBlocks:
    return "TooManyBlocks";
  case ErrorKind::ParseError:
    return "ParseError";
  case ErrorKind::DomainError:
    return "DomainError";
  case ErrorKind::NotSquare:
    return "NotSquare";
  case ErrorKind::BadFamilyParams:
    return "BadFamilyParams";
  case ErrorKind::NoRoot:
    return "NoRoot";
  case ErrorKind::TooLarge:
    return "TooLarge";
  }
  return "Unknown";
}

} // namespace eacqc
