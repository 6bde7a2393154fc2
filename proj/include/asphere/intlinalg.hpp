#ifndef ASPHERE_INTLINALG_HPP_
#define ASPHERE_INTLINALG_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace asphere {

  using Integer = boost::multiprecision::cpp_int;

  // Integer matrix on a finite truncation window, stored row by row with no
  // zero entries. All public indices are 1-based.
  class SparseIntMatrix {
   public:
    using Row = std::map<std::size_t, Integer>;

    SparseIntMatrix() = default;
    SparseIntMatrix(std::size_t rows, std::size_t cols);

    static SparseIntMatrix identity(std::size_t n);
    static SparseIntMatrix
    from_dense(std::vector<std::vector<Integer>> const& rows);
    static SparseIntMatrix from_dense(std::size_t                 rows,
                                      std::size_t                 cols,
                                      std::vector<long long> const& row_major);

    std::size_t rows() const noexcept {
      return _rows.size();
    }
    std::size_t cols() const noexcept {
      return _cols;
    }

    Integer at(std::size_t r, std::size_t c) const;
    void    set(std::size_t r, std::size_t c, Integer value);
    void    add(std::size_t r, std::size_t c, Integer const& value);

    Row const& row(std::size_t r) const;
    Row&       mutable_row(std::size_t r);

    std::size_t nonzeros() const noexcept;
    // (row, col, value) triples in row-major order.
    std::vector<std::tuple<std::size_t, std::size_t, Integer>> entries() const;
    std::vector<std::vector<Integer>> to_dense() const;

    bool is_identity() const;
    bool is_zero() const;

    SparseIntMatrix transpose() const;

    friend bool operator==(SparseIntMatrix const&,
                           SparseIntMatrix const&) = default;

   private:
    void check_index(std::size_t r, std::size_t c) const;

    std::vector<Row> _rows;
    std::size_t      _cols = 0;
  };

  SparseIntMatrix operator*(SparseIntMatrix const& a, SparseIntMatrix const& b);

  // Elementary operation on rows (or, in a column log, on columns):
  //   Swap(i, j), Negate(i), AddMultiple(target, source, k): target += k source
  struct ElementaryOp {
    enum class Kind { Swap, Negate, AddMultiple };

    Kind        kind   = Kind::Swap;
    std::size_t target = 1;
    std::size_t source = 1;
    Integer     coefficient;

    static ElementaryOp swap(std::size_t i, std::size_t j);
    static ElementaryOp negate(std::size_t i);
    static ElementaryOp
    add_multiple(std::size_t target, std::size_t source, Integer k);

    ElementaryOp inverse() const;

    friend bool operator==(ElementaryOp const&, ElementaryOp const&) = default;
  };

  class RowOpLog {
   public:
    RowOpLog() = default;
    explicit RowOpLog(std::vector<ElementaryOp> ops) : _ops(std::move(ops)) {}

    void push_back(ElementaryOp op) {
      _ops.push_back(std::move(op));
    }
    void append(RowOpLog const& other) {
      _ops.insert(_ops.end(), other._ops.begin(), other._ops.end());
    }

    std::vector<ElementaryOp> const& ops() const noexcept {
      return _ops;
    }
    std::size_t size() const noexcept {
      return _ops.size();
    }
    bool empty() const noexcept {
      return _ops.empty();
    }

    RowOpLog inverse() const;

    friend bool operator==(RowOpLog const&, RowOpLog const&) = default;

   private:
    std::vector<ElementaryOp> _ops;
  };

  // Throws IndexOutOfWindow when an op touches a row outside the window.
  SparseIntMatrix apply_row_ops(RowOpLog const& log, SparseIntMatrix m);
  void            apply_row_op(ElementaryOp const& op, SparseIntMatrix& m);
  // Same operations read as column operations.
  SparseIntMatrix apply_col_ops(RowOpLog const& log, SparseIntMatrix m);

  struct PivotResult {
    RowOpLog        log;
    SparseIntMatrix matrix;
  };

  // Row reduction of a base-change matrix until column 1 and row 1 are both
  // the first standard basis vector:
  //  (a) move the smallest nonzero |c_i1| to row 1, make it positive;
  //  (b) c_i1 = q c_11 + d with 0 <= d < c_11, subtract q times row 1, repeat;
  //  (c) triangularize columns 2..m (m = last nonzero column of row 1) on the
  //      trailing rows and clear each such column above its pivot.
  // Throws ZeroColumn / NonCoprimeColumn naming the failing column.
  PivotResult pivot_first_column(SparseIntMatrix const& c);

  // Iterates the pivot on trailing blocks. Replaying the log on c gives the
  // identity; throws NotUnimodular otherwise.
  RowOpLog reduce_to_identity(SparseIntMatrix const& c);

  struct SmithForm {
    // d_1 | d_2 | ..., min(rows, cols) entries, nonnegative, zeros last.
    std::vector<Integer> diagonal;
    RowOpLog             row_log;
    RowOpLog             col_log;

    std::size_t rank() const;
    bool        all_ones() const;
  };

  SmithForm smith_normal_form(SparseIntMatrix const& m);

  bool is_unimodular(SparseIntMatrix const& m);

  // A Z-basis of {v : m v = 0}, read off the column log of the Smith form.
  std::vector<std::vector<Integer>> integer_kernel(SparseIntMatrix const& m);

  std::vector<Integer> multiply(SparseIntMatrix const&      m,
                                std::vector<Integer> const& v);

}  // namespace asphere

#endif  // ASPHERE_INTLINALG_HPP_
