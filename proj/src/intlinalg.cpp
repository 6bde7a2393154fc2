#include "asphere/intlinalg.hpp"

#include <algorithm>
#include <string>

#include "asphere/error.hpp"

namespace asphere {

  namespace {
    Integer abs_value(Integer const& x) {
      return x < 0 ? Integer(-x) : x;
    }

    // Quotient rounded toward minus infinity, for p > 0.
    Integer floor_div(Integer const& a, Integer const& p) {
      Integer q = a / p;
      if (a < 0 && q * p != a) {
        --q;
      }
      return q;
    }

    std::string index_str(std::size_t r, std::size_t c) {
      return "(" + std::to_string(r) + ", " + std::to_string(c) + ")";
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // SparseIntMatrix
  ////////////////////////////////////////////////////////////////////////

  SparseIntMatrix::SparseIntMatrix(std::size_t rows, std::size_t cols)
      : _rows(rows), _cols(cols) {}

  SparseIntMatrix SparseIntMatrix::identity(std::size_t n) {
    SparseIntMatrix m(n, n);
    for (std::size_t i = 1; i <= n; ++i) {
      m.set(i, i, 1);
    }
    return m;
  }

  SparseIntMatrix
  SparseIntMatrix::from_dense(std::vector<std::vector<Integer>> const& rows) {
    std::size_t const cols = rows.empty() ? 0 : rows.front().size();
    SparseIntMatrix   m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) {
        throw Error(ErrorKind::IndexOutOfWindow, "ragged dense matrix");
      }
      for (std::size_t j = 0; j < cols; ++j) {
        m.set(i + 1, j + 1, rows[i][j]);
      }
    }
    return m;
  }

  SparseIntMatrix
  SparseIntMatrix::from_dense(std::size_t                   rows,
                              std::size_t                   cols,
                              std::vector<long long> const& row_major) {
    if (row_major.size() != rows * cols) {
      throw Error(ErrorKind::IndexOutOfWindow, "dense size mismatch");
    }
    SparseIntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        m.set(i + 1, j + 1, row_major[i * cols + j]);
      }
    }
    return m;
  }

  void SparseIntMatrix::check_index(std::size_t r, std::size_t c) const {
    if (r == 0 || c == 0 || r > rows() || c > _cols) {
      throw Error(ErrorKind::IndexOutOfWindow,
                  "entry " + index_str(r, c) + " outside a "
                      + std::to_string(rows()) + "x" + std::to_string(_cols)
                      + " window");
    }
  }

  Integer SparseIntMatrix::at(std::size_t r, std::size_t c) const {
    check_index(r, c);
    auto const& row = _rows[r - 1];
    auto        it  = row.find(c);
    return it == row.end() ? Integer(0) : it->second;
  }

  void SparseIntMatrix::set(std::size_t r, std::size_t c, Integer value) {
    check_index(r, c);
    auto& row = _rows[r - 1];
    if (value == 0) {
      row.erase(c);
    } else {
      row[c] = std::move(value);
    }
  }

  void SparseIntMatrix::add(std::size_t r, std::size_t c, Integer const& value) {
    check_index(r, c);
    if (value == 0) {
      return;
    }
    auto& row = _rows[r - 1];
    auto [it, inserted] = row.try_emplace(c, value);
    if (!inserted) {
      it->second += value;
      if (it->second == 0) {
        row.erase(it);
      }
    }
  }

  SparseIntMatrix::Row const& SparseIntMatrix::row(std::size_t r) const {
    if (r == 0 || r > rows()) {
      throw Error(ErrorKind::IndexOutOfWindow,
                  "row " + std::to_string(r) + " outside window of "
                      + std::to_string(rows()) + " rows");
    }
    return _rows[r - 1];
  }

  SparseIntMatrix::Row& SparseIntMatrix::mutable_row(std::size_t r) {
    if (r == 0 || r > rows()) {
      throw Error(ErrorKind::IndexOutOfWindow,
                  "row " + std::to_string(r) + " outside window of "
                      + std::to_string(rows()) + " rows");
    }
    return _rows[r - 1];
  }

  std::size_t SparseIntMatrix::nonzeros() const noexcept {
    std::size_t n = 0;
    for (auto const& row : _rows) {
      n += row.size();
    }
    return n;
  }

  std::vector<std::tuple<std::size_t, std::size_t, Integer>>
  SparseIntMatrix::entries() const {
    std::vector<std::tuple<std::size_t, std::size_t, Integer>> result;
    for (std::size_t i = 0; i < _rows.size(); ++i) {
      for (auto const& [c, v] : _rows[i]) {
        result.emplace_back(i + 1, c, v);
      }
    }
    return result;
  }

  std::vector<std::vector<Integer>> SparseIntMatrix::to_dense() const {
    std::vector<std::vector<Integer>> result(rows(),
                                             std::vector<Integer>(_cols));
    for (std::size_t i = 0; i < _rows.size(); ++i) {
      for (auto const& [c, v] : _rows[i]) {
        result[i][c - 1] = v;
      }
    }
    return result;
  }

  bool SparseIntMatrix::is_identity() const {
    if (rows() != _cols) {
      return false;
    }
    for (std::size_t i = 0; i < _rows.size(); ++i) {
      auto const& row = _rows[i];
      if (row.size() != 1 || row.begin()->first != i + 1
          || row.begin()->second != 1) {
        return false;
      }
    }
    return true;
  }

  bool SparseIntMatrix::is_zero() const {
    return nonzeros() == 0;
  }

  SparseIntMatrix SparseIntMatrix::transpose() const {
    SparseIntMatrix t(_cols, rows());
    for (std::size_t i = 0; i < _rows.size(); ++i) {
      for (auto const& [c, v] : _rows[i]) {
        t.set(c, i + 1, v);
      }
    }
    return t;
  }

  SparseIntMatrix operator*(SparseIntMatrix const& a, SparseIntMatrix const& b) {
    if (a.cols() != b.rows()) {
      throw Error(ErrorKind::IndexOutOfWindow, "matrix product shape mismatch");
    }
    SparseIntMatrix result(a.rows(), b.cols());
    for (std::size_t i = 1; i <= a.rows(); ++i) {
      for (auto const& [k, av] : a.row(i)) {
        for (auto const& [j, bv] : b.row(k)) {
          result.add(i, j, av * bv);
        }
      }
    }
    return result;
  }

  std::vector<Integer> multiply(SparseIntMatrix const&      m,
                                std::vector<Integer> const& v) {
    if (v.size() != m.cols()) {
      throw Error(ErrorKind::IndexOutOfWindow, "vector length mismatch");
    }
    std::vector<Integer> result(m.rows());
    for (std::size_t i = 1; i <= m.rows(); ++i) {
      for (auto const& [c, x] : m.row(i)) {
        result[i - 1] += x * v[c - 1];
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Elementary operations
  ////////////////////////////////////////////////////////////////////////

  ElementaryOp ElementaryOp::swap(std::size_t i, std::size_t j) {
    return ElementaryOp{Kind::Swap, i, j, 0};
  }

  ElementaryOp ElementaryOp::negate(std::size_t i) {
    return ElementaryOp{Kind::Negate, i, i, 0};
  }

  ElementaryOp
  ElementaryOp::add_multiple(std::size_t target, std::size_t source, Integer k) {
    if (target == source) {
      throw Error(ErrorKind::InvalidPresentation,
                  "AddMultiple requires distinct target and source");
    }
    return ElementaryOp{Kind::AddMultiple, target, source, std::move(k)};
  }

  ElementaryOp ElementaryOp::inverse() const {
    if (kind == Kind::AddMultiple) {
      return add_multiple(target, source, -coefficient);
    }
    return *this;
  }

  RowOpLog RowOpLog::inverse() const {
    std::vector<ElementaryOp> ops;
    ops.reserve(_ops.size());
    for (auto it = _ops.rbegin(); it != _ops.rend(); ++it) {
      ops.push_back(it->inverse());
    }
    return RowOpLog(std::move(ops));
  }

  void apply_row_op(ElementaryOp const& op, SparseIntMatrix& m) {
    auto const check = [&m](std::size_t r) {
      if (r == 0 || r > m.rows()) {
        throw Error(ErrorKind::IndexOutOfWindow,
                    "row operation touches row " + std::to_string(r)
                        + " outside window of " + std::to_string(m.rows())
                        + " rows");
      }
    };
    check(op.target);
    check(op.source);
    switch (op.kind) {
      case ElementaryOp::Kind::Swap:
        if (op.target != op.source) {
          std::swap(m.mutable_row(op.target), m.mutable_row(op.source));
        }
        break;
      case ElementaryOp::Kind::Negate:
        for (auto& [c, v] : m.mutable_row(op.target)) {
          v = -v;
        }
        break;
      case ElementaryOp::Kind::AddMultiple: {
        if (op.coefficient == 0) {
          break;
        }
        auto const source = m.row(op.source);
        for (auto const& [c, v] : source) {
          m.add(op.target, c, op.coefficient * v);
        }
        break;
      }
    }
  }

  SparseIntMatrix apply_row_ops(RowOpLog const& log, SparseIntMatrix m) {
    for (auto const& op : log.ops()) {
      apply_row_op(op, m);
    }
    return m;
  }

  SparseIntMatrix apply_col_ops(RowOpLog const& log, SparseIntMatrix m) {
    auto t = m.transpose();
    for (auto const& op : log.ops()) {
      apply_row_op(op, t);
    }
    return t.transpose();
  }

  ////////////////////////////////////////////////////////////////////////
  // Pivoting
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class PivotReducer {
     public:
      explicit PivotReducer(SparseIntMatrix m) : _m(std::move(m)) {}

      // Reduces the block with top-left corner (k, k) to (1) + C'.
      void pivot_block(std::size_t k) {
        pivot_column(k, k);
        for (std::size_t j = k + 1; j <= last_column(k); ++j) {
          pivot_column(j, j);
          for (std::size_t i = k; i < j; ++i) {
            Integer const v = _m.at(i, j);
            if (v != 0) {
              apply(ElementaryOp::add_multiple(i, j, -v));
            }
          }
        }
      }

      SparseIntMatrix const& matrix() const noexcept {
        return _m;
      }
      RowOpLog const& log() const noexcept {
        return _log;
      }
      SparseIntMatrix take_matrix() {
        return std::move(_m);
      }
      RowOpLog take_log() {
        return std::move(_log);
      }

     private:
      void apply(ElementaryOp op) {
        apply_row_op(op, _m);
        _log.push_back(std::move(op));
      }

      std::size_t last_column(std::size_t r) const {
        auto const& row = _m.row(r);
        return row.empty() ? 0 : row.rbegin()->first;
      }

      // Euclid loop on column col over rows >= first; on return the entry
      // (first, col) is 1 and every entry below it is 0.
      void pivot_column(std::size_t col, std::size_t first) {
        if (col > _m.cols()) {
          throw Error(ErrorKind::ZeroColumn,
                      "column " + std::to_string(col) + " outside window");
        }
        Integer g = 0;
        for (std::size_t i = first; i <= _m.rows(); ++i) {
          g = gcd(g, _m.at(i, col));
        }
        if (g == 0) {
          throw Error(ErrorKind::ZeroColumn,
                      "column " + std::to_string(col) + " vanishes below row "
                          + std::to_string(first));
        }
        if (g != 1) {
          throw Error(ErrorKind::NonCoprimeColumn,
                      "entries of column " + std::to_string(col)
                          + " have common divisor " + g.str());
        }
        while (true) {
          std::size_t best = 0;
          Integer     best_abs;
          for (std::size_t i = first; i <= _m.rows(); ++i) {
            Integer const a = abs_value(_m.at(i, col));
            if (a != 0 && (best == 0 || a < best_abs)) {
              best     = i;
              best_abs = a;
            }
          }
          if (best != first) {
            apply(ElementaryOp::swap(first, best));
          }
          if (_m.at(first, col) < 0) {
            apply(ElementaryOp::negate(first));
          }
          Integer const p      = _m.at(first, col);
          bool          others = false;
          for (std::size_t i = first + 1; i <= _m.rows(); ++i) {
            Integer const c = _m.at(i, col);
            if (c == 0) {
              continue;
            }
            Integer const q = floor_div(c, p);
            if (q != 0) {
              apply(ElementaryOp::add_multiple(i, first, -q));
            }
            if (c - q * p != 0) {
              others = true;
            }
          }
          if (!others) {
            break;
          }
        }
      }

      SparseIntMatrix _m;
      RowOpLog        _log;
    };
  }  // namespace

  PivotResult pivot_first_column(SparseIntMatrix const& c) {
    if (c.rows() == 0 || c.cols() == 0) {
      throw Error(ErrorKind::ZeroColumn, "empty window has no column 1");
    }
    PivotReducer reducer(c);
    reducer.pivot_block(1);
    return PivotResult{reducer.take_log(), reducer.take_matrix()};
  }

  RowOpLog reduce_to_identity(SparseIntMatrix const& c) {
    if (c.rows() != c.cols()) {
      throw Error(ErrorKind::NotUnimodular,
                  "window is " + std::to_string(c.rows()) + "x"
                      + std::to_string(c.cols()) + ", not square");
    }
    PivotReducer reducer(c);
    for (std::size_t k = 1; k <= c.rows(); ++k) {
      try {
        reducer.pivot_block(k);
      } catch (Error const& e) {
        if (e.kind() == ErrorKind::ZeroColumn
            || e.kind() == ErrorKind::NonCoprimeColumn) {
          throw Error(ErrorKind::NotUnimodular,
                      "pivot stage " + std::to_string(k) + " failed: " + e.what());
        }
        throw;
      }
    }
    if (!reducer.matrix().is_identity()) {
      throw Error(ErrorKind::InvariantViolation,
                  "pivoting finished without reaching the identity");
    }
    return reducer.take_log();
  }

  ////////////////////////////////////////////////////////////////////////
  // Smith normal form
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class SmithReducer {
     public:
      explicit SmithReducer(SparseIntMatrix const& m)
          : _a(m.to_dense()), _rows(m.rows()), _cols(m.cols()) {}

      SmithForm run() {
        std::size_t const diag = std::min(_rows, _cols);
        SmithForm         result;
        for (std::size_t t = 0; t < diag; ++t) {
          if (!reduce_at(t)) {
            break;
          }
        }
        for (std::size_t t = 0; t < diag; ++t) {
          result.diagonal.push_back(_a[t][t]);
        }
        result.row_log = std::move(_row_log);
        result.col_log = std::move(_col_log);
        return result;
      }

     private:
      // Returns false when the trailing block is zero.
      bool reduce_at(std::size_t t) {
        while (true) {
          std::size_t bi = 0, bj = 0;
          Integer     best;
          for (std::size_t i = t; i < _rows; ++i) {
            for (std::size_t j = t; j < _cols; ++j) {
              if (_a[i][j] != 0) {
                Integer const a = abs_value(_a[i][j]);
                if (best == 0 || a < best) {
                  best = a;
                  bi   = i;
                  bj   = j;
                }
              }
            }
          }
          if (best == 0) {
            return false;
          }
          swap_rows(t, bi);
          swap_cols(t, bj);
          Integer const p     = _a[t][t];
          bool          dirty = false;
          for (std::size_t i = t + 1; i < _rows; ++i) {
            if (_a[i][t] != 0) {
              Integer const q = _a[i][t] / p;
              add_row(i, t, -q);
              dirty = dirty || _a[i][t] != 0;
            }
          }
          for (std::size_t j = t + 1; j < _cols; ++j) {
            if (_a[t][j] != 0) {
              Integer const q = _a[t][j] / p;
              add_col(j, t, -q);
              dirty = dirty || _a[t][j] != 0;
            }
          }
          if (dirty) {
            continue;
          }
          bool divisible = true;
          for (std::size_t i = t + 1; i < _rows && divisible; ++i) {
            for (std::size_t j = t + 1; j < _cols; ++j) {
              if (_a[i][j] % p != 0) {
                add_row(t, i, 1);
                divisible = false;
                break;
              }
            }
          }
          if (!divisible) {
            continue;
          }
          if (p < 0) {
            _row_log.push_back(ElementaryOp::negate(t + 1));
            for (auto& v : _a[t]) {
              v = -v;
            }
          }
          return true;
        }
      }

      void swap_rows(std::size_t i, std::size_t j) {
        if (i != j) {
          std::swap(_a[i], _a[j]);
          _row_log.push_back(ElementaryOp::swap(i + 1, j + 1));
        }
      }
      void swap_cols(std::size_t i, std::size_t j) {
        if (i != j) {
          for (auto& row : _a) {
            std::swap(row[i], row[j]);
          }
          _col_log.push_back(ElementaryOp::swap(i + 1, j + 1));
        }
      }
      void add_row(std::size_t target, std::size_t source, Integer const& k) {
        if (k == 0) {
          return;
        }
        for (std::size_t j = 0; j < _cols; ++j) {
          _a[target][j] += k * _a[source][j];
        }
        _row_log.push_back(ElementaryOp::add_multiple(target + 1, source + 1, k));
      }
      void add_col(std::size_t target, std::size_t source, Integer const& k) {
        if (k == 0) {
          return;
        }
        for (std::size_t i = 0; i < _rows; ++i) {
          _a[i][target] += k * _a[i][source];
        }
        _col_log.push_back(ElementaryOp::add_multiple(target + 1, source + 1, k));
      }

      std::vector<std::vector<Integer>> _a;
      std::size_t                       _rows;
      std::size_t                       _cols;
      RowOpLog                          _row_log;
      RowOpLog                          _col_log;
    };
  }  // namespace

  std::size_t SmithForm::rank() const {
    return static_cast<std::size_t>(
        std::count_if(diagonal.begin(), diagonal.end(), [](Integer const& d) {
          return d != 0;
        }));
  }

  bool SmithForm::all_ones() const {
    return std::all_of(diagonal.begin(), diagonal.end(), [](Integer const& d) {
      return d == 1;
    });
  }

  SmithForm smith_normal_form(SparseIntMatrix const& m) {
    return SmithReducer(m).run();
  }

  bool is_unimodular(SparseIntMatrix const& m) {
    return m.rows() == m.cols() && smith_normal_form(m).all_ones();
  }

  std::vector<std::vector<Integer>> integer_kernel(SparseIntMatrix const& m) {
    auto const  snf = smith_normal_form(m);
    auto const  q   = apply_col_ops(snf.col_log,
                                 SparseIntMatrix::identity(m.cols()));
    std::size_t const rank = snf.rank();
    std::vector<std::vector<Integer>> basis;
    for (std::size_t k = rank + 1; k <= m.cols(); ++k) {
      std::vector<Integer> v(m.cols());
      for (std::size_t i = 1; i <= m.cols(); ++i) {
        v[i - 1] = q.at(i, k);
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

}  // namespace asphere
