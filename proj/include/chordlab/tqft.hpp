#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chordlab/chord.hpp"
#include "chordlab/matrix.hpp"

namespace chordlab {

/// Commutative unital algebra with a cocommutative coproduct that is a map
/// of modules, and no counit. Tensor powers use the lexicographic basis
/// e_{i1} (x) ... (x) e_{ik} -> index i1 d^{k-1} + ... + ik.
struct FrobeniusAlgebra {
    Field field;
    std::vector<std::string> basis;
    /// d x d^2: column i d + j holds e_i e_j.
    Matrix product;
    /// d^2 x d: column i holds Delta(e_i).
    Matrix coproduct;
    /// d x 1.
    Matrix unit;
    /// Per-basis degrees; empty when ungraded.
    std::vector<int> degrees;
    /// Ambient dimension n of a graded algebra.
    int ambient = 0;

    int dimension() const noexcept { return static_cast<int>(basis.size()); }
    bool graded() const noexcept { return !degrees.empty(); }

    /// Checks table shapes and fields; throws invalid_algebra.
    void check_shapes() const;
    /// Same constants reduced into another field.
    FrobeniusAlgebra in_field(const Field& target) const;
};

/// "pd2": 1, x with x^2 = 0, Delta(1) = 1(x)x + x(x)1, Delta(x) = x(x)x.
/// "st2": 1 (degree 2), x (degree 0), x^2 = 0, Delta(1) = x(x)x,
/// Delta(x) = 0, n = 2. "zero-delta": the pd2 product with Delta = 0.
/// Throws invalid_algebra for other names.
FrobeniusAlgebra builtin_algebra(const std::string& name, const Field& field = Field::rationals());
std::vector<std::string> builtin_algebra_names();

struct AxiomResult {
    std::string name;
    bool passed = true;
    /// Basis indices exhibiting the failure.
    std::vector<int> witness;
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomResult> results;
    bool all_passed() const;
};

/// Associativity, commutativity, unit, coassociativity, cocommutativity,
/// both module conditions, and for graded algebras the degrees of product,
/// coproduct and unit.
AxiomReport check_axioms(const FrobeniusAlgebra& a);

/// -(2g - 2 + p + q) n.
int degree_shift(int p, int q, int g, int n);

struct OperationMatrix {
    int p = 0;
    int q = 0;
    int g = 0;
    /// d^q x d^p.
    Matrix matrix;
    /// Present for graded algebras.
    std::optional<int> degree_shift;
};

/// Largest tensor power dimension mu() will build.
inline constexpr int kMaxTensorDimension = 256;

/// Delta^(q-1) H^g m^(p-1) with H = m Delta. Throws no_outgoing for q = 0 and
/// size_limit when d^p or d^q exceeds kMaxTensorDimension.
OperationMatrix mu(const FrobeniusAlgebra& a, int p, int q, int g);

/// The handle operator m Delta.
Matrix handle_operator(const FrobeniusAlgebra& a);

struct GluingCheck {
    bool equal = true;
    /// Composite minus direct operation.
    Matrix difference;
};

/// Compares mu(q,r,g2) mu(p,q,g1) with mu(p,r,g1+g2+q-1).
GluingCheck verify_gluing(const FrobeniusAlgebra& a, int p, int q, int r, int g1, int g2);

/// The operation of a chord diagram, which depends only on its type.
OperationMatrix operation_from_diagram(const ChordDiagram& c, const FrobeniusAlgebra& a);

struct Counit {
    std::vector<Scalar> theta;
    /// Whether the pairing theta(ab) is nondegenerate.
    bool nondegenerate = false;
};

/// Solves (theta (x) id) Delta = id; nullopt when no solution exists.
std::optional<Counit> counit_solve(const FrobeniusAlgebra& a);

/// Sum of basis degrees of tensor index `index` in the arity-fold power.
int tensor_degree(const FrobeniusAlgebra& a, int index, int arity);

/// Every nonzero entry of op changes degree by op.degree_shift. True for
/// ungraded algebras.
bool graded_consistent(const FrobeniusAlgebra& a, const OperationMatrix& op);

/// Rank over the matrix's field.
int rank(const Matrix& m);

}  // namespace chordlab
