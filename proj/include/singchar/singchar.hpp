#pragma once

#include "singchar/algebra.hpp"
#include "singchar/bivariate.hpp"
#include "singchar/curves.hpp"
#include "singchar/error.hpp"
#include "singchar/extended.hpp"
#include "singchar/invariants.hpp"
#include "singchar/newton.hpp"
#include "singchar/nondeg.hpp"
#include "singchar/oracle.hpp"
#include "singchar/parse.hpp"
#include "singchar/poly.hpp"
#include "singchar/report.hpp"
#include "singchar/standard_basis.hpp"
#include "singchar/verify.hpp"
