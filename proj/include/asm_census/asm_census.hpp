#pragma once

#include "asm_census/census.hpp"
#include "asm_census/enumerate.hpp"
#include "asm_census/error.hpp"
#include "asm_census/matrix.hpp"
#include "asm_census/naive_oracle.hpp"
#include "asm_census/report.hpp"
#include "asm_census/selfcheck.hpp"
#include "asm_census/symmetry.hpp"
