#pragma once

// Umbrella header.

#include "pretzel/arith.hpp"
#include "pretzel/errors.hpp"
#include "pretzel/goeritz.hpp"
#include "pretzel/graded_root.hpp"
#include "pretzel/params.hpp"
#include "pretzel/plumbing.hpp"
#include "pretzel/qm.hpp"
#include "pretzel/rasmussen.hpp"
#include "pretzel/report.hpp"
#include "pretzel/scan.hpp"
#include "pretzel/signature.hpp"
#include "pretzel/squeeze.hpp"
