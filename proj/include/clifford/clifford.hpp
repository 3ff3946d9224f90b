#ifndef CLIFFORD_CLIFFORD_HPP
#define CLIFFORD_CLIFFORD_HPP

#include "clifford/automorphisms.hpp"
#include "clifford/blade.hpp"
#include "clifford/derivations.hpp"
#include "clifford/error.hpp"
#include "clifford/expr.hpp"
#include "clifford/linalg.hpp"
#include "clifford/locmat.hpp"
#include "clifford/matrix_rep.hpp"
#include "clifford/multivector.hpp"
#include "clifford/scalar.hpp"
#include "clifford/signature.hpp"
#include "clifford/tensor_decomp.hpp"
#include "clifford/trace_norm.hpp"

#endif  // CLIFFORD_CLIFFORD_HPP
