#pragma once

#include "error.hpp"
#include "group.hpp"
#include "sequence.hpp"
#include "zset.hpp"
#include "product.hpp"
#include "atoms.hpp"
#include "factor.hpp"
#include "invariants.hpp"
#include "omega.hpp"
#include "cyclic.hpp"
#include "structure.hpp"
#include "report.hpp"
#include "suites.hpp"
#include "io.hpp"
