#ifndef LEFDEC_SPAN_HPP
#define LEFDEC_SPAN_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "lefdec/matrix.hpp"

namespace lefdec {

/// Sparse vector in a large ambient coordinate space (flattened operators).
using SparseVec = std::vector<std::pair<std::int64_t, Scalar>>;

SparseVec flatten(const Mat& m);
Mat unflatten(const Field* field, int rows, int cols, const SparseVec& v);

/// r += c * s, merging sorted entries and dropping exact zeros.
SparseVec sparse_axpy(const SparseVec& r, const Scalar& c, const SparseVec& s);
void sparse_scale(SparseVec& v, const Scalar& c);

/// Payload hooks let SpanBuilder carry witness data through row reduction.
inline void payload_axpy(std::monostate&, const Scalar&, const std::monostate&) {}
inline void payload_scale(std::monostate&, const Scalar&) {}

/// Incremental reduced-row-echelon span over sparse vectors. Rows are kept
/// mutually reduced with ascending pivots, so the basis is the canonical
/// rref basis of the subspace regardless of insertion order. A payload per
/// row is combined along with the row arithmetic (used for witness words).
template <class Payload = std::monostate>
class SpanBuilder {
 public:
  struct Row {
    SparseVec v;
    Payload payload;
  };

  explicit SpanBuilder(const Field* field) : fld_(field) {}

  int dim() const { return static_cast<int>(rows_.size()); }
  const Field* field() const { return fld_; }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<std::int64_t>& pivots() const { return pivots_; }

  /// Fully reduces v against the span, clearing every coordinate sitting at
  /// an existing pivot column; empty result means v is contained. The
  /// payload is reduced alongside when `payload` is non-null.
  SparseVec reduce(SparseVec v, Payload* payload = nullptr) const {
    size_t idx = 0, k = 0;
    while (idx < v.size() && k < rows_.size()) {
      const std::int64_t col = v[idx].first;
      while (k < rows_.size() && pivots_[k] < col) ++k;
      if (k == rows_.size()) break;
      if (pivots_[k] != col) {
        ++idx;
        continue;
      }
      Scalar c = -v[idx].second;
      v = sparse_axpy(v, c, rows_[k].v);
      if (payload) payload_axpy(*payload, c, rows_[k].payload);
      // prefix before col is untouched and the entry at col vanished, so
      // v[idx] is now the first entry past col
    }
    return v;
  }

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  /// Inserts v (with payload); returns true when it enlarged the span.
  bool insert(SparseVec v, Payload payload = Payload{}) {
    v = reduce(std::move(v), &payload);
    if (v.empty()) return false;
    Scalar inv = v[0].second.inverse();
    sparse_scale(v, inv);
    payload_scale(payload, inv);
    std::int64_t piv = v[0].first;
    // back-eliminate the fresh pivot from existing rows
    for (size_t k = 0; k < rows_.size(); ++k) {
      Scalar c;
      for (const auto& [col, val] : rows_[k].v) {
        if (col == piv) {
          c = val;
          break;
        }
        if (col > piv) break;
      }
      if (!c.is_zero()) {
        Scalar neg = -c;
        rows_[k].v = sparse_axpy(rows_[k].v, neg, v);
        payload_axpy(rows_[k].payload, neg, payload);
      }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    size_t idx = static_cast<size_t>(pos - pivots_.begin());
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + idx, Row{std::move(v), std::move(payload)});
    return true;
  }

  /// Coordinates of v in the span basis; std::nullopt if v is outside.
  std::optional<std::vector<Scalar>> coordinates(SparseVec v) const {
    std::vector<Scalar> coords(rows_.size(), fld_->zero());
    size_t k = 0;
    while (!v.empty()) {
      while (k < rows_.size() && pivots_[k] < v[0].first) ++k;
      if (k == rows_.size() || pivots_[k] != v[0].first) return std::nullopt;
      coords[k] = v[0].second;
      Scalar c = -v[0].second;
      v = sparse_axpy(v, c, rows_[k].v);
    }
    return coords;
  }

 private:
  const Field* fld_;
  std::vector<Row> rows_;
  std::vector<std::int64_t> pivots_;
};

/// A canonical basis of a subspace of End(F^side): rref-reduced flattened
/// operators, realized back as matrices. Two OperatorSpans are equal as
/// subspaces iff their bases are identical element lists.
class OperatorSpan {
 public:
  OperatorSpan(const Field* field, int side)
      : side_(side), builder_(field) {}

  static OperatorSpan from_mats(const Field* field, int side,
                                const std::vector<Mat>& mats);

  const Field* field() const { return builder_.field(); }
  int side() const { return side_; }
  int dim() const { return builder_.dim(); }
  const std::vector<Mat>& basis() const { return basis_; }

  bool insert(const Mat& m);
  bool contains(const Mat& m) const;
  bool contains_span(const OperatorSpan& other) const;
  bool equals(const OperatorSpan& other) const;
  /// Coordinates of m in the canonical basis; nullopt when m is outside.
  std::optional<std::vector<Scalar>> coordinates(const Mat& m) const;

  /// Is the span closed under operator composition? (checked pairwise)
  bool is_multiplicatively_closed() const;
  bool contains_identity() const;

  OperatorSpan union_with(const OperatorSpan& other) const;

 private:
  void rebuild_basis();
  int side_;
  SpanBuilder<> builder_;
  std::vector<Mat> basis_;
};

}  // namespace lefdec

#endif
