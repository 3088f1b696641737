#pragma once

#include "confalg/gc_algebra.hpp"
#include "confalg/lie_algebra.hpp"

namespace confalg {

/// The Lie algebra A ⊗ L with
///   [a⊗v, b⊗w] = (-1)^{|v||b|} (ab) ⊗ [v,w].
/// Basis is ordered algebra-major; degrees and Tate weights add, the Lie
/// weight is that of the L factor, and L's truncation is inherited.
GLieAlgebra tensor_lie(const GCAlgebra& a, const GLieAlgebra& l);

}  // namespace confalg
