#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liebialg/algebra.hpp"
#include "liebialg/linalg.hpp"
#include "liebialg/report.hpp"

namespace liebialg {

/// Subspace of a coordinate space, held both as the ordered generating set
/// (independent rows, order preserved) and as the canonical reduced
/// row-echelon form used for membership and equality tests.
class Subspace {
public:
    Subspace() : parent_dim_(0) {}

    static Subspace from_generators(int parent_dim, const std::vector<RatVec>& gens) {
        Subspace s;
        s.parent_dim_ = parent_dim;
        RatMat probe(0, 0);
        std::vector<RatVec> independent;
        for (const auto& g : gens) {
            if (static_cast<int>(g.size()) != parent_dim)
                throw dimension_mismatch("subspace generator length");
            std::vector<RatVec> trial = independent;
            trial.push_back(g);
            RatMat m = RatMat::from_rows(trial);
            if (rank(m) == static_cast<int>(trial.size())) independent = std::move(trial);
        }
        s.gens_ = RatMat::from_rows(independent);
        if (independent.empty()) s.gens_ = RatMat(0, parent_dim);
        s.rref_ = s.gens_;
        rref_in_place(s.rref_);
        return s;
    }

    static Subspace zero(int parent_dim) { return from_generators(parent_dim, {}); }

    static Subspace full(int parent_dim) {
        std::vector<RatVec> rows;
        for (int i = 0; i < parent_dim; ++i) {
            RatVec e(parent_dim);
            e[i] = 1;
            rows.push_back(e);
        }
        return from_generators(parent_dim, rows);
    }

    int parent_dim() const { return parent_dim_; }
    int dim() const { return gens_.rows(); }
    const RatMat& generators() const { return gens_; }
    const RatMat& echelon() const { return rref_; }
    RatVec generator(int i) const { return gens_.row(i); }

    bool contains(const RatVec& v) const {
        if (static_cast<int>(v.size()) != parent_dim_) throw dimension_mismatch("membership test");
        RatVec r = v;
        for (int row = 0; row < rref_.rows(); ++row) {
            int pivot = -1;
            for (int j = 0; j < parent_dim_; ++j)
                if (rref_(row, j) != 0) {
                    pivot = j;
                    break;
                }
            if (pivot < 0) continue;
            if (r[pivot] != 0) {
                Rational f = r[pivot];  // pivot entry of rref is 1
                for (int j = 0; j < parent_dim_; ++j) r[j] -= f * rref_(row, j);
            }
        }
        return is_zero(r);
    }

    bool operator==(const Subspace& o) const {
        return parent_dim_ == o.parent_dim_ && rref_ == o.rref_;
    }

private:
    int parent_dim_;
    RatMat gens_;
    RatMat rref_;
};

/// Annihilator A^0 = { a in V* : a(v) = 0 for all v in A }, in coordinate
/// dual-basis coordinates.  dim A + dim A^0 = parent_dim.
inline Subspace annihilator(int parent_dim, const Subspace& a) {
    if (a.parent_dim() != parent_dim) throw dimension_mismatch("annihilator parent dim");
    RatMat ns = nullspace(a.generators());
    std::vector<RatVec> rows;
    for (int i = 0; i < ns.rows(); ++i) rows.push_back(ns.row(i));
    return Subspace::from_generators(parent_dim, rows);
}

struct SubalgebraReport {
    bool pass = true;
    int gen_a = -1, gen_b = -1;  // first generator pair whose bracket escapes

    std::string describe() const {
        if (pass) return "closed under bracket";
        return "bracket of generators " + std::to_string(gen_a + 1) + "," +
               std::to_string(gen_b + 1) + " escapes the span";
    }
};

inline SubalgebraReport is_subalgebra(const LieAlgebra& alg, const Subspace& a) {
    if (a.parent_dim() != alg.dim()) throw dimension_mismatch("is_subalgebra");
    for (int u = 0; u < a.dim(); ++u)
        for (int v = u + 1; v < a.dim(); ++v)
            if (!a.contains(alg.bracket(a.generator(u), a.generator(v))))
                return SubalgebraReport{false, u, v};
    return SubalgebraReport{};
}

/// Checks that (alg; A, B) is a double Lie algebra: A, B subalgebras and
/// alg = A (+) B as vector spaces.
inline Report verify_double_decomposition(const LieAlgebra& alg, const Subspace& a,
                                          const Subspace& b) {
    Report rep;
    rep.suite = "double_decomposition";
    SubalgebraReport sa = is_subalgebra(alg, a);
    rep.add("A_subalgebra", sa.pass, sa.pass ? "" : sa.describe());
    SubalgebraReport sb = is_subalgebra(alg, b);
    rep.add("B_subalgebra", sb.pass, sb.pass ? "" : sb.describe());
    bool dims = a.dim() + b.dim() == alg.dim();
    rep.add("dimension_sum", dims,
            dims ? "" : std::to_string(a.dim()) + "+" + std::to_string(b.dim()) +
                        " != " + std::to_string(alg.dim()));
    std::vector<RatVec> stacked;
    for (int i = 0; i < a.dim(); ++i) stacked.push_back(a.generator(i));
    for (int i = 0; i < b.dim(); ++i) stacked.push_back(b.generator(i));
    bool direct = stacked.empty() ||
                  rank(RatMat::from_rows(stacked)) == static_cast<int>(stacked.size());
    rep.add("trivial_intersection", direct, direct ? "" : "A and B overlap");
    return rep;
}

}  // namespace liebialg
