#pragma once

#include "asm.hpp"
#include "bigrassmannian.hpp"
#include "determinant.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "matrix.hpp"
#include "numeric.hpp"
#include "poly.hpp"
#include "symbolic.hpp"
#include "tnn.hpp"
#include "verify.hpp"
