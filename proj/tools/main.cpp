/*******************************************************************************
 * Copyright (c) 2026 The eacqc Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "eacqc/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
  std::ios::sync_with_stdio(false);
  return eacqc::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
