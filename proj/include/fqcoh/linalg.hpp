#pragma once
/**
 * @file linalg.hpp
 * @brief Exact dense linear algebra over F_q.
 *
 * Elimination always takes the leftmost pivot column and, within it, the
 * first row holding a nonzero entry. For p = 2 the streaming eliminator can
 * store rows bit-sliced: an F_{2^m} row of length L becomes m bit-planes of
 * ceil(L/64) words, and a scaled row update is m×m plane XORs per word.
 */

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "fqcoh/gfq.hpp"

namespace fqcoh {

class GFqMatrix {
 public:
  GFqMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static GFqMatrix identity(const FieldSpec& f, std::size_t n) {
    GFqMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Code at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Code v) noexcept { data_[r * cols_ + c] = v; }
  std::span<Code> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const Code> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  bool is_zero() const noexcept {
    for (Code c : data_)
      if (c != 0) return false;
    return true;
  }

  GFqMatrix transpose() const {
    GFqMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
  }

  std::vector<Code> apply(std::span<const Code> x) const {
    if (x.size() != cols_) throw Error(Errc::DimensionMismatch, "vector length != cols");
    std::vector<Code> y(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      Code acc = 0;
      for (std::size_t c = 0; c < cols_; ++c)
        if (x[c] != 0 && at(r, c) != 0) acc = field_.add(acc, field_.mul(at(r, c), x[c]));
      y[r] = acc;
    }
    return y;
  }

  friend GFqMatrix operator*(const GFqMatrix& a, const GFqMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "inner dimensions differ");
    const FieldSpec& F = a.field_;
    GFqMatrix out(F, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Code s = a.at(i, k);
        if (s == 0) continue;
        const Code* mr = F.mul_row(s);
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b.at(k, j) != 0) out.set(i, j, F.add(out.at(i, j), mr[b.at(k, j)]));
      }
    return out;
  }

  /// "rows cols" header, then one line of element codes per row.
  std::string dump() const {
    std::ostringstream os;
    os << rows_ << ' ' << cols_ << '\n';
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c);
      os << '\n';
    }
    return os.str();
  }

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Code> data_;
};

namespace detail {

/// row[from..] += s * src[from..]
inline void axpy(const FieldSpec& F, std::span<Code> row, Code s, std::span<const Code> src,
                 std::size_t from) {
  const Code* mr = F.mul_row(s);
  for (std::size_t k = from; k < row.size(); ++k)
    if (src[k] != 0) row[k] = F.add(row[k], mr[src[k]]);
}

/// In-place reduced row echelon form; returns pivot columns in row order.
inline std::vector<std::size_t> rref(GFqMatrix& M) {
  const FieldSpec& F = M.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
    std::size_t sel = r;
    while (sel < M.rows() && M.at(sel, c) == 0) ++sel;
    if (sel == M.rows()) continue;
    if (sel != r)
      for (std::size_t k = 0; k < M.cols(); ++k) {
        const Code t = M.at(r, k);
        M.set(r, k, M.at(sel, k));
        M.set(sel, k, t);
      }
    const Code inv = F.inv(M.at(r, c));
    const Code* mr = F.mul_row(inv);
    for (std::size_t k = c; k < M.cols(); ++k) M.set(r, k, mr[M.at(r, k)]);
    for (std::size_t i = 0; i < M.rows(); ++i) {
      if (i == r || M.at(i, c) == 0) continue;
      detail::axpy(F, M.row(i), F.neg(M.at(i, c)), M.row(r), c);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

/// Rank by plain Gaussian elimination on element codes.
inline std::size_t rank_generic(GFqMatrix M) {
  const FieldSpec& F = M.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
    std::size_t sel = r;
    while (sel < M.rows() && M.at(sel, c) == 0) ++sel;
    if (sel == M.rows()) continue;
    if (sel != r)
      for (std::size_t k = c; k < M.cols(); ++k) {
        const Code t = M.at(r, k);
        M.set(r, k, M.at(sel, k));
        M.set(sel, k, t);
      }
    const Code inv_lead = F.inv(M.at(r, c));
    for (std::size_t i = r + 1; i < M.rows(); ++i) {
      if (M.at(i, c) == 0) continue;
      detail::axpy(F, M.row(i), F.neg(F.mul(M.at(i, c), inv_lead)), M.row(r), c);
    }
    ++r;
  }
  return r;
}

/**
 * Incremental echelon basis over any F_q. Stored rows have a leading 1 at
 * distinct pivot columns; memory is (number of pivots) × cols elements.
 */
class RowEchelon {
 public:
  RowEchelon(FieldSpec field, std::size_t cols)
      : field_(std::move(field)), cols_(cols), pivot_row_(cols, -1) {}

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Adds a row; true when it was independent of the rows seen so far.
  bool insert(std::span<const Code> row) {
    if (row.size() != cols_) throw Error(Errc::DimensionMismatch, "row length != cols");
    std::vector<Code> r(row.begin(), row.end());
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r[c] == 0) continue;
      const auto pr = pivot_row_[c];
      if (pr >= 0) {
        detail::axpy(field_, r, field_.neg(r[c]), rows_[static_cast<std::size_t>(pr)], c);
        continue;
      }
      const Code* mr = field_.mul_row(field_.inv(r[c]));
      for (std::size_t k = c; k < cols_; ++k) r[k] = mr[r[k]];
      pivot_row_[c] = static_cast<std::ptrdiff_t>(rows_.size());
      pivot_cols_.push_back(c);
      rows_.push_back(std::move(r));
      return true;
    }
    return false;
  }

  /// Remainder of v modulo the span: the unique representative that is zero
  /// at every pivot column.
  std::vector<Code> reduce(std::span<const Code> v) const {
    if (v.size() != cols_) throw Error(Errc::DimensionMismatch, "row length != cols");
    std::vector<Code> r(v.begin(), v.end());
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r[c] == 0) continue;
      const auto pr = pivot_row_[c];
      if (pr >= 0) detail::axpy(field_, r, field_.neg(r[c]), rows_[static_cast<std::size_t>(pr)], c);
    }
    return r;
  }

  bool contains(std::span<const Code> v) const {
    auto r = reduce(v);
    for (Code c : r)
      if (c != 0) return false;
    return true;
  }

  /// Basis of {x : <row, x> = 0 for every inserted row}.
  std::vector<std::vector<Code>> kernel_basis() const {
    GFqMatrix M(field_, rows_.size(), cols_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      std::copy(rows_[i].begin(), rows_[i].end(), M.row(i).begin());
    return kernel_from_rref(M);
  }

  /// Kernel of an arbitrary matrix, reusing its storage for the RREF.
  static std::vector<std::vector<Code>> kernel_from_rref(GFqMatrix& M) {
    const FieldSpec& F = M.field();
    const auto pivots = detail::rref(M);
    std::vector<bool> is_pivot(M.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Code>> basis;
    for (std::size_t free = 0; free < M.cols(); ++free) {
      if (is_pivot[free]) continue;
      std::vector<Code> v(M.cols(), 0);
      v[free] = 1;
      for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(M.at(i, free));
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  FieldSpec field_;
  std::size_t cols_;
  std::vector<std::vector<Code>> rows_;
  std::vector<std::ptrdiff_t> pivot_row_;
  std::vector<std::size_t> pivot_cols_;
};

/// Bit-sliced echelon basis over F_{2^m}; same contract as RowEchelon::insert.
class PackedRowEchelon {
 public:
  PackedRowEchelon(FieldSpec field, std::size_t cols)
      : field_(std::move(field)),
        cols_(cols),
        m_(field_.m()),
        words_((cols + 63) / 64),
        pivot_row_(cols, -1) {
    if (field_.p() != 2) throw Error(Errc::DimensionMismatch, "bit-sliced rows need p = 2");
    const unsigned q = field_.q();
    masks_.assign(std::size_t{q} * m_, 0);
    for (unsigned c = 0; c < q; ++c)
      for (unsigned j = 0; j < m_; ++j) {
        const Code v = field_.mul(static_cast<Code>(c), static_cast<Code>(1u << j));
        for (unsigned k = 0; k < m_; ++k)
          if ((v >> k) & 1u) masks_[std::size_t{c} * m_ + k] |= 1u << j;
      }
    scratch_.resize(std::size_t{m_} * words_);
  }

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return pivots_; }
  std::size_t bytes() const noexcept { return storage_.size() * sizeof(std::uint64_t); }

  bool insert(std::span<const Code> row) {
    if (row.size() != cols_) throw Error(Errc::DimensionMismatch, "row length != cols");
    std::fill(scratch_.begin(), scratch_.end(), 0);
    for (std::size_t c = 0; c < cols_; ++c) {
      const unsigned v = row[c];
      if (v == 0) continue;
      for (unsigned k = 0; k < m_; ++k)
        if ((v >> k) & 1u) scratch_[k * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
    }
    return insert_scratch();
  }

  /// Sparse row given as (column, value) pairs.
  bool insert_sparse(std::span<const std::pair<std::uint32_t, Code>> entries) {
    std::fill(scratch_.begin(), scratch_.end(), 0);
    for (auto [c, v] : entries)
      for (unsigned k = 0; k < m_; ++k)
        if ((v >> k) & 1u) scratch_[k * words_ + c / 64] ^= std::uint64_t{1} << (c % 64);
    return insert_scratch();
  }

  Code entry(const std::uint64_t* planes, std::size_t c) const noexcept {
    unsigned v = 0;
    for (unsigned k = 0; k < m_; ++k) v |= static_cast<unsigned>((planes[k * words_ + c / 64] >> (c % 64)) & 1u) << k;
    return static_cast<Code>(v);
  }

 private:
  // First nonzero column at or after `from`, or cols_.
  std::size_t next_nonzero(const std::uint64_t* planes, std::size_t from) const noexcept {
    std::size_t w = from / 64;
    if (w >= words_) return cols_;
    std::uint64_t bits = 0;
    for (unsigned k = 0; k < m_; ++k) bits |= planes[k * words_ + w];
    bits &= ~std::uint64_t{0} << (from % 64);
    while (bits == 0) {
      if (++w >= words_) return cols_;
      for (unsigned k = 0; k < m_; ++k) bits |= planes[k * words_ + w];
    }
    return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
  }

  // planes[w0..] += s * src[w0..]
  void axpy(std::uint64_t* planes, const std::uint64_t* src, Code s, std::size_t w0) const noexcept {
    const std::uint32_t* mk = &masks_[std::size_t{s} * m_];
    for (std::size_t w = w0; w < words_; ++w) {
      std::uint64_t in[16];
      bool any = false;
      for (unsigned j = 0; j < m_; ++j) {
        in[j] = src[j * words_ + w];
        any |= in[j] != 0;
      }
      if (!any) continue;
      for (unsigned k = 0; k < m_; ++k) {
        std::uint64_t acc = 0;
        const std::uint32_t mask = mk[k];
        for (unsigned j = 0; j < m_; ++j) acc ^= in[j] & (std::uint64_t{0} - ((mask >> j) & 1u));
        planes[k * words_ + w] ^= acc;
      }
    }
  }

  bool insert_scratch() {
    std::uint64_t* r = scratch_.data();
    const std::size_t stride = std::size_t{m_} * words_;
    for (std::size_t c = next_nonzero(r, 0); c < cols_; c = next_nonzero(r, c + 1)) {
      const Code lead = entry(r, c);
      const auto pr = pivot_row_[c];
      if (pr >= 0) {
        axpy(r, storage_.data() + static_cast<std::size_t>(pr) * stride, lead, c / 64);
        continue;
      }
      // Normalize: multiply by lead^{-1}.
      const Code s = field_.inv(lead);
      const std::size_t base = storage_.size();
      storage_.resize(base + stride, 0);
      axpy(storage_.data() + base, r, s, c / 64);
      pivot_row_[c] = static_cast<std::ptrdiff_t>(pivots_++);
      return true;
    }
    return false;
  }

  FieldSpec field_;
  std::size_t cols_;
  unsigned m_;
  std::size_t words_;
  std::vector<std::ptrdiff_t> pivot_row_;
  std::vector<std::uint32_t> masks_;  // masks_[c*m + k]: planes j feeding plane k of c·v
  std::vector<std::uint64_t> scratch_;
  std::vector<std::uint64_t> storage_;
  std::size_t pivots_ = 0;
};

using SparseVector = std::vector<std::pair<std::uint32_t, Code>>;

/**
 * Echelon basis for sparse rows (entries sorted by column). Same pivot rule
 * as the dense eliminators. With tracking enabled every stored row also
 * carries the combination of inserted rows it came from, so a row that
 * reduces to zero yields a linear dependency among the inputs.
 */
class SparseRowEchelon {
 public:
  SparseRowEchelon(FieldSpec field, std::size_t cols, bool track = false,
                   std::uint64_t max_entries = ~std::uint64_t{0})
      : field_(std::move(field)), cols_(cols), track_(track), max_entries_(max_entries), pivot_row_(cols, -1) {}

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  std::uint64_t entries() const noexcept { return entries_; }

  /// Inserts the next input row; true when it raised the rank. When tracking
  /// and the row was dependent, dependency() holds coefficients c_i with
  /// Σ c_i · input_i = 0.
  bool insert(SparseVector row) {
    SparseVector tag;
    if (track_) tag.push_back({static_cast<std::uint32_t>(inserted_), 1});
    ++inserted_;
    reduce_in_place(row, &tag, true);
    if (row.empty()) {
      dependency_ = std::move(tag);
      return false;
    }
    const Code inv = field_.inv(row.front().second);
    const Code* mr = field_.mul_row(inv);
    for (auto& e : row) e.second = mr[e.second];
    for (auto& e : tag) e.second = mr[e.second];
    pivot_row_[row.front().first] = static_cast<std::ptrdiff_t>(rows_.size());
    entries_ += row.size() + tag.size();
    if (entries_ > max_entries_) throw Error(Errc::ResourceLimit, "sparse elimination exceeded its memory budget");
    rows_.push_back(std::move(row));
    if (track_) tags_.push_back(std::move(tag));
    return true;
  }

  const SparseVector& dependency() const noexcept { return dependency_; }

  /// Remainder modulo the span, zero on every pivot column.
  SparseVector reduce(SparseVector row) const {
    reduce_in_place(row, nullptr, false);
    return row;
  }

 private:
  static void axpy(const FieldSpec& F, SparseVector& r, Code s, const SparseVector& P, SparseVector& tmp) {
    const Code* mr = F.mul_row(s);
    tmp.clear();
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < P.size()) {
      if (j == P.size() || (i < r.size() && r[i].first < P[j].first)) {
        tmp.push_back(r[i++]);
      } else if (i == r.size() || P[j].first < r[i].first) {
        tmp.push_back({P[j].first, mr[P[j].second]});
        ++j;
      } else {
        const Code c = F.add(r[i].second, mr[P[j].second]);
        if (c != 0) tmp.push_back({r[i].first, c});
        ++i, ++j;
      }
    }
    r.swap(tmp);
  }

  // Leading-term elimination when `leading_only`, otherwise full reduction.
  void reduce_in_place(SparseVector& row, SparseVector* tag, bool leading_only) const {
    SparseVector tmp;
    std::size_t pos = 0;
    while (pos < row.size()) {
      const auto pr = pivot_row_[row[pos].first];
      if (pr < 0) {
        if (leading_only) return;
        ++pos;
        continue;
      }
      const Code s = field_.neg(row[pos].second);
      axpy(field_, row, s, rows_[static_cast<std::size_t>(pr)], tmp);
      if (tag && track_) axpy(field_, *tag, s, tags_[static_cast<std::size_t>(pr)], tmp);
    }
  }

  FieldSpec field_;
  std::size_t cols_;
  bool track_;
  std::uint64_t max_entries_;
  std::vector<std::ptrdiff_t> pivot_row_;
  std::vector<SparseVector> rows_;
  std::vector<SparseVector> tags_;
  SparseVector dependency_;
  std::size_t inserted_ = 0;
  std::uint64_t entries_ = 0;
};

/// Rank through the bit-sliced eliminator (p = 2 only).
inline std::size_t rank_bitsliced(const GFqMatrix& M) {
  PackedRowEchelon e(M.field(), M.cols());
  for (std::size_t r = 0; r < M.rows() && e.rank() < M.cols(); ++r) e.insert(M.row(r));
  return e.rank();
}

inline std::size_t rank(const GFqMatrix& M) {
  return M.field().p() == 2 ? rank_bitsliced(M) : rank_generic(M);
}

inline std::vector<std::vector<Code>> kernel_basis(const GFqMatrix& M) {
  GFqMatrix work = M;
  return RowEchelon::kernel_from_rref(work);
}

/// Some x with M x = b, or nullopt when b is outside the column space.
inline std::optional<std::vector<Code>> solve(const GFqMatrix& M, std::span<const Code> b) {
  if (b.size() != M.rows()) throw Error(Errc::DimensionMismatch, "rhs length != rows");
  GFqMatrix aug(M.field(), M.rows(), M.cols() + 1);
  for (std::size_t r = 0; r < M.rows(); ++r) {
    std::copy(M.row(r).begin(), M.row(r).end(), aug.row(r).begin());
    aug.set(r, M.cols(), b[r]);
  }
  const auto pivots = detail::rref(aug);
  std::vector<Code> x(M.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == M.cols()) return std::nullopt;
    x[pivots[i]] = aug.at(i, M.cols());
  }
  return x;
}

/**
 * Rank of the matrix whose rows are produced one at a time by
 * `next(std::vector<Code>& row) -> bool` (false when exhausted). At most
 * `cols` reduced rows are kept; for p = 2 they are stored bit-sliced.
 */
template <class RowSource>
std::size_t rank_streaming(const FieldSpec& F, std::size_t cols, RowSource&& next) {
  std::vector<Code> row(cols, 0);
  if (F.p() == 2) {
    PackedRowEchelon e(F, cols);
    while (next(row))
      if (e.rank() < cols) e.insert(row);
    return e.rank();
  }
  RowEchelon e(F, cols);
  while (next(row))
    if (e.rank() < cols) e.insert(row);
  return e.rank();
}

/// Bytes held by a streaming eliminator with `pivots` stored rows.
inline std::uint64_t echelon_bytes(const FieldSpec& F, std::uint64_t pivots, std::uint64_t cols) {
  if (F.p() == 2) return pivots * F.m() * ((cols + 63) / 64) * 8;
  return pivots * cols * sizeof(Code);
}

}  // namespace fqcoh
