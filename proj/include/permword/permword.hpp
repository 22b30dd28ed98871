#pragma once

// Umbrella header.

#include "permword/analysis.hpp"
#include "permword/compare.hpp"
#include "permword/doubling.hpp"
#include "permword/error.hpp"
#include "permword/formulas.hpp"
#include "permword/patterns.hpp"
#include "permword/perm_set.hpp"
#include "permword/report.hpp"
#include "permword/spec_text.hpp"
#include "permword/subperm.hpp"
#include "permword/suites.hpp"
#include "permword/word.hpp"
#include "permword/word_spec.hpp"
