#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tjurina/poly.hpp"

namespace tjurina {

// Row-major matrix of polynomials over one shared context.
class PolyMatrix {
  public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols, Ctx ctx);
    PolyMatrix(int rows, int cols, std::vector<Polynomial> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Ctx& ctx() const { return ctx_; }

    const Polynomial& at(int r, int c) const { return entries_[r * cols_ + c]; }
    Polynomial& at(int r, int c) { return entries_[r * cols_ + c]; }
    const std::vector<Polynomial>& entries() const { return entries_; }

    PolyMatrix transposed() const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    bool operator==(const PolyMatrix& o) const;

    // Stacks `below` underneath this matrix (column counts must agree).
    PolyMatrix stacked(const PolyMatrix& below) const;
    PolyMatrix transport(const Ctx& target) const;
    PolyMatrix map_entries(const std::function<Polynomial(const Polynomial&)>& f) const;

    std::string to_string() const;

  private:
    int rows_ = 0, cols_ = 0;
    Ctx ctx_;
    std::vector<Polynomial> entries_;
};

// All k x k minors by memoized Laplace expansion; row/column index subsets are
// enumerated lexicographically and each minor is the plain determinant of the
// selected submatrix.
std::vector<Polynomial> minors(const PolyMatrix& a, int k);

// Determinant of a square matrix (memoized Laplace along the first column).
Polynomial determinant(const PolyMatrix& a);

// For a canonical (t+1) x t matrix returns delta_i = (-1)^(i+1) det(M with row
// i deleted), i = 1..t+1. With this signing (delta_1,...,delta_{t+1}) * M = 0.
std::vector<Polynomial> maximal_minors_signed(const PolyMatrix& m);

// Entry (i,j) = d f_i / d vars_j.
PolyMatrix jacobian(const std::vector<Polynomial>& fs, const std::vector<int>& vars, const Ctx& ctx);
PolyMatrix jacobian(const std::vector<Polynomial>& fs, const std::vector<std::string>& vars, const Ctx& ctx);

// Returns the (t+1) x t orientation (transposing a t x (t+1) input). Rejects
// square shapes and entries with a nonzero constant term.
PolyMatrix canonicalize_presentation(const PolyMatrix& raw);

enum class JetTag { Full, TwoRows, OneRow, Zero };

struct JetClass {
    JetTag tag;
    int generic_rank;
};

const char* jet_tag_name(JetTag t);

// For t = 2 only: rank of the 1-jet pencil j1(col1)*lambda + j1(col2) over the
// rational function field in lambda. Rank 3 (Full) is exactly the case where
// the transform can have at most isolated singularities.
JetClass classify_one_jet(const PolyMatrix& m);

} // namespace tjurina
