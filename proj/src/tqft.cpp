#include "chordlab/tqft.hpp"

#include <algorithm>

#include "chordlab/error.hpp"

namespace chordlab {

namespace {

// Digits of a tensor index, most significant first.
std::vector<int> digits(int index, int arity, int d) {
    std::vector<int> out(arity);
    for (int i = arity - 1; i >= 0; --i) {
        out[i] = index % d;
        index /= d;
    }
    return out;
}

// First column where two equal-shape matrices differ, or -1.
int first_difference(const Matrix& a, const Matrix& b) {
    for (int c = 0; c < a.cols(); ++c)
        for (int r = 0; r < a.rows(); ++r)
            if (!(a.at(r, c) == b.at(r, c))) return c;
    return -1;
}

AxiomResult compare(const std::string& name, const Matrix& lhs, const Matrix& rhs, int arity, int d) {
    AxiomResult res{name, true, {}, {}};
    const int c = first_difference(lhs, rhs);
    if (c >= 0) {
        res.passed = false;
        res.witness = digits(c, arity, d);
        res.detail = "the two sides differ on this input";
    }
    return res;
}

// Power d^k, or -1 once it exceeds the cap.
int bounded_power(int d, int k) {
    long long v = 1;
    for (int i = 0; i < k; ++i) {
        v *= d;
        if (v > kMaxTensorDimension) return -1;
    }
    return static_cast<int>(v);
}

Matrix iterated_product(const FrobeniusAlgebra& a, int p) {
    const int d = a.dimension();
    if (p == 0) return a.unit;
    Matrix m = Matrix::identity(a.field, d);
    for (int k = 2; k <= p; ++k) m = a.product * m.kron(Matrix::identity(a.field, d));
    return m;
}

Matrix iterated_coproduct(const FrobeniusAlgebra& a, int q) {
    const int d = a.dimension();
    Matrix m = Matrix::identity(a.field, d);
    for (int k = 2; k <= q; ++k) m = m.kron(Matrix::identity(a.field, d)) * a.coproduct;
    return m;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(Matrix& m, int pivot_cols) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < pivot_cols && row < m.rows(); ++col) {
        int sel = row;
        while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        for (int c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(row, c));
        const Scalar lead = m.at(row, col);
        for (int c = 0; c < m.cols(); ++c) m.at(row, c) = m.at(row, c) / lead;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            const Scalar f = m.at(r, col);
            for (int c = 0; c < m.cols(); ++c) m.at(r, c) = m.at(r, c) - f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

void FrobeniusAlgebra::check_shapes() const {
    const int d = dimension();
    if (d < 1) throw Error(ErrorCode::invalid_algebra, "algebra needs at least one basis element");
    if (d > 16) throw Error(ErrorCode::size_limit, "algebra dimension " + std::to_string(d) + " exceeds 16");
    auto shape = [&](const Matrix& m, int r, int c, const char* what) {
        if (m.rows() != r || m.cols() != c || !(m.field() == field))
            throw Error(ErrorCode::invalid_algebra, std::string(what) + " table has the wrong shape or field");
    };
    shape(product, d, d * d, "product");
    shape(coproduct, d * d, d, "coproduct");
    shape(unit, d, 1, "unit");
    if (!degrees.empty() && static_cast<int>(degrees.size()) != d)
        throw Error(ErrorCode::invalid_algebra, "expected a degree for each basis element");
}

FrobeniusAlgebra FrobeniusAlgebra::in_field(const Field& target) const {
    FrobeniusAlgebra out = *this;
    out.field = target;
    out.product = product.in_field(target);
    out.coproduct = coproduct.in_field(target);
    out.unit = unit.in_field(target);
    return out;
}

std::vector<std::string> builtin_algebra_names() { return {"pd2", "st2", "zero-delta"}; }

FrobeniusAlgebra builtin_algebra(const std::string& name, const Field& field) {
    FrobeniusAlgebra a;
    a.field = field;
    a.basis = {"1", "x"};
    a.product = Matrix(field, 2, 4);
    a.coproduct = Matrix(field, 4, 2);
    a.unit = Matrix(field, 2, 1);
    const Scalar one(field, 1);
    // 1 is the unit and x^2 = 0.
    a.product.at(0, 0) = one;
    a.product.at(1, 1) = one;
    a.product.at(1, 2) = one;
    a.unit.at(0, 0) = one;
    if (name == "pd2") {
        a.coproduct.at(1, 0) = one;  // 1 (x) x
        a.coproduct.at(2, 0) = one;  // x (x) 1
        a.coproduct.at(3, 1) = one;  // x (x) x
    } else if (name == "st2") {
        a.coproduct.at(3, 0) = one;
        a.degrees = {2, 0};
        a.ambient = 2;
    } else if (name != "zero-delta") {
        throw Error(ErrorCode::invalid_algebra, "unknown built-in algebra '" + name + "' (pd2, st2, zero-delta)");
    }
    return a;
}

bool AxiomReport::all_passed() const {
    return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.passed; });
}

AxiomReport check_axioms(const FrobeniusAlgebra& a) {
    a.check_shapes();
    const int d = a.dimension();
    const Field& f = a.field;
    const Matrix id = Matrix::identity(f, d);
    const Matrix flip = swap_matrix(f, d);
    const Matrix& m = a.product;
    const Matrix& delta = a.coproduct;

    AxiomReport report;
    report.results.push_back(compare("associativity", m * m.kron(id), m * id.kron(m), 3, d));
    report.results.push_back(compare("commutativity", m * flip, m, 2, d));
    {
        auto left = compare("unit", m * a.unit.kron(id), id, 1, d);
        auto right = compare("unit", m * id.kron(a.unit), id, 1, d);
        report.results.push_back(left.passed ? right : left);
    }
    report.results.push_back(compare("coassociativity", delta.kron(id) * delta, id.kron(delta) * delta, 1, d));
    report.results.push_back(compare("cocommutativity", flip * delta, delta, 1, d));
    report.results.push_back(compare("module_left", delta * m, m.kron(id) * id.kron(delta), 2, d));
    report.results.push_back(compare("module_right", delta * m, id.kron(m) * delta.kron(id), 2, d));

    if (a.graded()) {
        const auto& deg = a.degrees;
        const int n = a.ambient;
        AxiomResult prod{"product_degree", true, {}, {}};
        for (int k = 0; k < d && prod.passed; ++k)
            for (int c = 0; c < d * d; ++c)
                if (!m.at(k, c).is_zero() && deg[k] != deg[c / d] + deg[c % d] - n) {
                    prod = {"product_degree", false, {c / d, c % d, k}, "e_i e_j has a term of the wrong degree"};
                    break;
                }
        report.results.push_back(prod);
        AxiomResult cop{"coproduct_degree", true, {}, {}};
        for (int i = 0; i < d && cop.passed; ++i)
            for (int r = 0; r < d * d; ++r)
                if (!delta.at(r, i).is_zero() && deg[r / d] + deg[r % d] != deg[i] - n) {
                    cop = {"coproduct_degree", false, {i, r / d, r % d}, "Delta(e_i) has a term of the wrong degree"};
                    break;
                }
        report.results.push_back(cop);
        AxiomResult un{"unit_degree", true, {}, {}};
        for (int k = 0; k < d; ++k)
            if (!a.unit.at(k, 0).is_zero() && deg[k] != n) {
                un = {"unit_degree", false, {k}, "the unit has a component outside degree n"};
                break;
            }
        report.results.push_back(un);
    }
    return report;
}

int degree_shift(int p, int q, int g, int n) { return -(2 * g - 2 + p + q) * n; }

Matrix handle_operator(const FrobeniusAlgebra& a) { return a.product * a.coproduct; }

OperationMatrix mu(const FrobeniusAlgebra& a, int p, int q, int g) {
    a.check_shapes();
    if (q < 1)
        throw Error(ErrorCode::no_outgoing,
                    "operations need at least one outgoing circle: the algebra has no counit, so surfaces whose "
                    "components lack an outgoing boundary carry no operation");
    if (p < 0 || g < 0) throw Error(ErrorCode::invalid_algebra, "p and g must be non-negative");
    const int d = a.dimension();
    if (bounded_power(d, p) < 0 || bounded_power(d, q) < 0)
        throw Error(ErrorCode::size_limit,
                    "tensor powers above " + std::to_string(kMaxTensorDimension) + " dimensions are not supported");

    Matrix h_power = Matrix::identity(a.field, d);
    const Matrix handle = handle_operator(a);
    for (int i = 0; i < g; ++i) h_power = handle * h_power;

    OperationMatrix op;
    op.p = p;
    op.q = q;
    op.g = g;
    op.matrix = iterated_coproduct(a, q) * (h_power * iterated_product(a, p));
    if (a.graded()) op.degree_shift = degree_shift(p, q, g, a.ambient);
    return op;
}

GluingCheck verify_gluing(const FrobeniusAlgebra& a, int p, int q, int r, int g1, int g2) {
    const Matrix composite = mu(a, q, r, g2).matrix * mu(a, p, q, g1).matrix;
    const Matrix direct = mu(a, p, r, g1 + g2 + q - 1).matrix;
    GluingCheck out;
    out.difference = composite - direct;
    out.equal = out.difference.is_zero();
    return out;
}

OperationMatrix operation_from_diagram(const ChordDiagram& c, const FrobeniusAlgebra& a) {
    const TopType t = c.type();
    return mu(a, t.p, t.q, t.g);
}

std::optional<Counit> counit_solve(const FrobeniusAlgebra& a) {
    a.check_shapes();
    const int d = a.dimension();
    // Unknowns theta_j; one equation per (i, k): sum_j D[j k][i] theta_j = [i == k].
    Matrix system(a.field, d * d, d + 1);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            const int row = i * d + k;
            for (int j = 0; j < d; ++j) system.at(row, j) = a.coproduct.at(j * d + k, i);
            system.at(row, d) = Scalar(a.field, i == k ? 1 : 0);
        }
    const auto pivots = row_reduce(system, d);
    for (int r = static_cast<int>(pivots.size()); r < system.rows(); ++r)
        if (!system.at(r, d).is_zero()) return std::nullopt;

    Counit out;
    out.theta.assign(d, Scalar(a.field, 0));
    for (std::size_t r = 0; r < pivots.size(); ++r) out.theta[pivots[r]] = system.at(static_cast<int>(r), d);

    Matrix pairing(a.field, d, d);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
            Scalar s(a.field, 0);
            for (int k = 0; k < d; ++k) s += a.product.at(k, x * d + y) * out.theta[k];
            pairing.at(x, y) = s;
        }
    out.nondegenerate = rank(pairing) == d;
    return out;
}

int rank(const Matrix& m) {
    Matrix copy = m;
    return static_cast<int>(row_reduce(copy, copy.cols()).size());
}

int tensor_degree(const FrobeniusAlgebra& a, int index, int arity) {
    int total = 0;
    for (int digit : digits(index, arity, a.dimension())) total += a.degrees[digit];
    return total;
}

bool graded_consistent(const FrobeniusAlgebra& a, const OperationMatrix& op) {
    if (!a.graded() || !op.degree_shift) return true;
    for (int r = 0; r < op.matrix.rows(); ++r)
        for (int c = 0; c < op.matrix.cols(); ++c)
            if (!op.matrix.at(r, c).is_zero() &&
                tensor_degree(a, r, op.q) - tensor_degree(a, c, op.p) != *op.degree_shift)
                return false;
    return true;
}

}  // namespace chordlab
