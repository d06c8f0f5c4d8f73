/*
 * Copyright 2026 The linkrank Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef LINKRANK_LINKRANK_HPP
#define LINKRANK_LINKRANK_HPP

#include "linkrank/arith.hpp"
#include "linkrank/error.hpp"
#include "linkrank/fcs.hpp"
#include "linkrank/framed.hpp"
#include "linkrank/liedim.hpp"
#include "linkrank/oracle/bruteforce.hpp"
#include "linkrank/oracle/linalg.hpp"
#include "linkrank/oracle/superalgebra.hpp"
#include "linkrank/oracle/verify.hpp"
#include "linkrank/ranks.hpp"
#include "linkrank/stiefel.hpp"
#include "linkrank/tables.hpp"

#endif  // LINKRANK_LINKRANK_HPP
