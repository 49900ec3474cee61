#pragma once

#include "maxsub/algebra.hpp"
#include "maxsub/capelli.hpp"
#include "maxsub/field.hpp"
#include "maxsub/gri.hpp"
#include "maxsub/matrix.hpp"
#include "maxsub/polynomial.hpp"
#include "maxsub/report.hpp"
#include "maxsub/version.hpp"
#include "maxsub/witness.hpp"
