#include "tjurina/matrix.hpp"

#include <functional>
#include <sstream>
#include <unordered_map>

namespace tjurina {

PolyMatrix::PolyMatrix(int rows, int cols, Ctx ctx)
    : rows_(rows), cols_(cols), ctx_(ctx),
      entries_(static_cast<size_t>(rows) * cols, Polynomial::zero(ctx)) {
    if (rows <= 0 || cols <= 0) throw Error(Errc::ShapeError, "matrix dimensions must be positive");
}

PolyMatrix::PolyMatrix(int rows, int cols, std::vector<Polynomial> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows <= 0 || cols <= 0) throw Error(Errc::ShapeError, "matrix dimensions must be positive");
    if (entries_.size() != static_cast<size_t>(rows) * cols)
        throw Error(Errc::ShapeError, "entry count does not match dimensions");
    ctx_ = entries_[0].ctx();
    for (const auto& p : entries_)
        if (p.ctx() != ctx_) throw Error(Errc::ContextMismatch, "matrix entries in mixed contexts");
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix t(cols_, rows_, ctx_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::ShapeError, "matrix shape mismatch");
    PolyMatrix r(rows_, cols_, ctx_);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::ShapeError, "matrix shape mismatch");
    PolyMatrix r(rows_, cols_, ctx_);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
    return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

PolyMatrix PolyMatrix::stacked(const PolyMatrix& below) const {
    if (cols_ != below.cols_) throw Error(Errc::ShapeError, "stack: column counts differ");
    if (ctx_ != below.ctx_) throw Error(Errc::ContextMismatch, "stack: contexts differ");
    std::vector<Polynomial> e = entries_;
    e.insert(e.end(), below.entries_.begin(), below.entries_.end());
    return PolyMatrix(rows_ + below.rows_, cols_, std::move(e));
}

PolyMatrix PolyMatrix::transport(const Ctx& target) const {
    std::vector<Polynomial> e;
    e.reserve(entries_.size());
    for (const auto& p : entries_) e.push_back(p.transport(target));
    return PolyMatrix(rows_, cols_, std::move(e));
}

PolyMatrix PolyMatrix::map_entries(const std::function<Polynomial(const Polynomial&)>& f) const {
    std::vector<Polynomial> e;
    e.reserve(entries_.size());
    for (const auto& p : entries_) e.push_back(f(p));
    return PolyMatrix(rows_, cols_, std::move(e));
}

std::string PolyMatrix::to_string() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        os << "[";
        for (int c = 0; c < cols_; ++c) {
            if (c) os << ", ";
            os << at(r, c).to_string();
        }
        os << "]\n";
    }
    return os.str();
}

namespace {

struct MaskPair {
    uint64_t rows, cols;
    bool operator==(const MaskPair& o) const { return rows == o.rows && cols == o.cols; }
};

struct MaskPairHash {
    size_t operator()(const MaskPair& p) const {
        return std::hash<uint64_t>()(p.rows * 0x9e3779b97f4a7c15ULL ^ p.cols);
    }
};

// Laplace expansion along the first selected column; the memo table lives for
// one top-level call only.
class DetMemo {
  public:
    explicit DetMemo(const PolyMatrix& a) : a_(a) {}

    Polynomial det(uint64_t rowmask, uint64_t colmask) {
        int n = __builtin_popcountll(rowmask);
        if (n == 0) return Polynomial::constant(a_.ctx(), 1);
        auto it = memo_.find({rowmask, colmask});
        if (it != memo_.end()) return it->second;
        int col = __builtin_ctzll(colmask);
        uint64_t rest_cols = colmask & (colmask - 1);
        Polynomial acc(a_.ctx());
        int sign = 1;
        for (uint64_t rm = rowmask; rm;) {
            int row = __builtin_ctzll(rm);
            rm &= rm - 1;
            const Polynomial& entry = a_.at(row, col);
            if (!entry.is_zero()) {
                Polynomial sub = det(rowmask & ~(1ULL << row), rest_cols);
                Polynomial piece = entry * sub;
                acc = (sign > 0) ? acc + piece : acc - piece;
            }
            sign = -sign;
        }
        memo_.emplace(MaskPair{rowmask, colmask}, acc);
        return acc;
    }

  private:
    const PolyMatrix& a_;
    std::unordered_map<MaskPair, Polynomial, MaskPairHash> memo_;
};

// Lexicographic enumeration of k-subsets of {0..n-1}.
void subsets(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> idx(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            f(idx);
            return;
        }
        for (int i = start; i <= n - (k - depth); ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

uint64_t mask_of(const std::vector<int>& idx) {
    uint64_t m = 0;
    for (int i : idx) m |= 1ULL << i;
    return m;
}

} // namespace

std::vector<Polynomial> minors(const PolyMatrix& a, int k) {
    if (k < 1 || k > std::min(a.rows(), a.cols()))
        throw Error(Errc::ShapeError, "minor size out of range");
    DetMemo memo(a);
    std::vector<Polynomial> out;
    subsets(a.rows(), k, [&](const std::vector<int>& rs) {
        uint64_t rmask = mask_of(rs);
        subsets(a.cols(), k, [&](const std::vector<int>& cs) {
            out.push_back(memo.det(rmask, mask_of(cs)));
        });
    });
    return out;
}

Polynomial determinant(const PolyMatrix& a) {
    if (a.rows() != a.cols()) throw Error(Errc::ShapeError, "determinant of non-square matrix");
    DetMemo memo(a);
    return memo.det((1ULL << a.rows()) - 1, (1ULL << a.cols()) - 1);
}

std::vector<Polynomial> maximal_minors_signed(const PolyMatrix& m) {
    if (m.rows() != m.cols() + 1)
        throw Error(Errc::ShapeError, "expected a canonical (t+1) x t matrix");
    DetMemo memo(m);
    uint64_t all_rows = (1ULL << m.rows()) - 1;
    uint64_t all_cols = (1ULL << m.cols()) - 1;
    std::vector<Polynomial> out;
    for (int i = 0; i < m.rows(); ++i) {
        Polynomial d = memo.det(all_rows & ~(1ULL << i), all_cols);
        out.push_back(i % 2 == 0 ? d : -d);
    }
    return out;
}

PolyMatrix jacobian(const std::vector<Polynomial>& fs, const std::vector<int>& vars, const Ctx& ctx) {
    if (fs.empty()) throw Error(Errc::ShapeError, "jacobian of empty list");
    std::vector<Polynomial> e;
    e.reserve(fs.size() * vars.size());
    for (const auto& f : fs) {
        if (f.ctx() != ctx) throw Error(Errc::ContextMismatch, "jacobian: mixed contexts");
        for (int v : vars) e.push_back(f.derivative(v));
    }
    return PolyMatrix(static_cast<int>(fs.size()), static_cast<int>(vars.size()), std::move(e));
}

PolyMatrix jacobian(const std::vector<Polynomial>& fs, const std::vector<std::string>& vars,
                    const Ctx& ctx) {
    std::vector<int> idx;
    for (const auto& v : vars) idx.push_back(ctx->require(v));
    return jacobian(fs, idx, ctx);
}

PolyMatrix canonicalize_presentation(const PolyMatrix& raw) {
    PolyMatrix m = raw;
    if (m.rows() == m.cols() + 1) {
        // already canonical
    } else if (m.cols() == m.rows() + 1) {
        m = m.transposed();
    } else {
        throw Error(Errc::ShapeError,
                    "presentation matrix must be (t+1) x t or t x (t+1), got " +
                        std::to_string(m.rows()) + " x " + std::to_string(m.cols()));
    }
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            for (const auto& t : m.at(r, c).terms())
                if (t.m.is_one())
                    throw Error(Errc::InputError,
                                "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                    ") has a nonzero constant term (not a germ at the origin)");
    return m;
}

const char* jet_tag_name(JetTag t) {
    switch (t) {
        case JetTag::Full: return "FULL";
        case JetTag::TwoRows: return "TWO_ROWS";
        case JetTag::OneRow: return "ONE_ROW";
        case JetTag::Zero: return "ZERO";
    }
    return "?";
}

JetClass classify_one_jet(const PolyMatrix& m) {
    if (m.cols() != 2 || m.rows() != 3)
        throw Error(Errc::WrongType, "1-jet classification needs a canonical 3 x 2 matrix (t = 2)");
    int n = m.ctx()->nvars();
    if (n < 3) throw Error(Errc::WrongType, "need at least 3 ambient variables");

    // pencil L(lambda) = j1(col1)*lambda + j1(col2) as a 3 x n matrix over Q[lambda]
    Ctx lam_ctx = RingContext::make({{{"lambda"}, BlockKind::Degrevlex}});
    Polynomial lambda = Polynomial::variable(lam_ctx, "lambda");
    std::vector<std::vector<Polynomial>> pencil(3, std::vector<Polynomial>(n, Polynomial::zero(lam_ctx)));
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 2; ++c) {
            for (const auto& t : m.at(r, c).terms()) {
                if (t.m.total_degree() != 1) continue;
                int v = 0;
                while (t.m.e[v] == 0) ++v;
                Polynomial coeff = Polynomial::constant(lam_ctx, t.c);
                if (c == 0) coeff = coeff * lambda;
                pencil[r][v] = pencil[r][v] + coeff;
            }
        }
    }

    // fraction-free elimination over Q[lambda]; rank over the function field
    int rank = 0;
    int row = 0;
    for (int col = 0; col < n && row < 3; ++col) {
        int pivot = -1;
        for (int r = row; r < 3; ++r)
            if (!pencil[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(pencil[row], pencil[pivot]);
        for (int r = row + 1; r < 3; ++r) {
            if (pencil[r][col].is_zero()) continue;
            Polynomial a = pencil[row][col];
            Polynomial b = pencil[r][col];
            for (int c2 = col; c2 < n; ++c2)
                pencil[r][c2] = pencil[r][c2] * a - pencil[row][c2] * b;
        }
        ++row;
        ++rank;
    }

    JetTag tag = JetTag::Zero;
    if (rank == 3) tag = JetTag::Full;
    else if (rank == 2) tag = JetTag::TwoRows;
    else if (rank == 1) tag = JetTag::OneRow;
    return JetClass{tag, rank};
}

} // namespace tjurina
