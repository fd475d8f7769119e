#pragma once

#include "ksym/darboux.hpp"
#include "ksym/error.hpp"
#include "ksym/forms.hpp"
#include "ksym/kspace.hpp"
#include "ksym/lagrangian.hpp"
#include "ksym/matrix.hpp"
#include "ksym/poly.hpp"
#include "ksym/rational.hpp"
#include "ksym/subspace.hpp"
