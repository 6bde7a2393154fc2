#include "asphere/pi2probe.hpp"

#include <algorithm>
#include <string>

#include "asphere/error.hpp"

namespace asphere {

  namespace {
    // Column of a letter in the coset table: x_i -> 2(i-1), x_i^-1 -> 2i-1.
    std::size_t column(Letter const& l) {
      return 2 * (l.index - 1) + (l.sign > 0 ? 0 : 1);
    }
    std::size_t inverse_column(std::size_t col) {
      return col ^ 1U;
    }
  }  // namespace

  CosetTable::CosetTable(GenIndex                              generators,
                         std::vector<std::vector<std::size_t>> action,
                         Status                                status,
                         std::size_t                           limit)
      : _generators(generators),
        _action(std::move(action)),
        _status(status),
        _limit(limit) {}

  std::size_t CosetTable::act(std::size_t coset, Letter const& l) const {
    if (coset == 0 || coset > _action.size() || l.index > _generators) {
      throw Error(ErrorKind::IncompleteTable, "coset or letter out of range");
    }
    std::size_t const image = _action[coset - 1][column(l)];
    if (image == 0) {
      throw Error(ErrorKind::IncompleteTable,
                  "coset " + std::to_string(coset) + " has no image");
    }
    return image;
  }

  std::size_t CosetTable::act(std::size_t coset, Word const& w) const {
    for (auto const& l : w) {
      coset = act(coset, l);
    }
    return coset;
  }

  ////////////////////////////////////////////////////////////////////////
  // Coset enumeration
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class Enumerator {
     public:
      Enumerator(Presentation const& p, std::size_t limit)
          : _width(2 * p.generators()), _limit(limit) {
        for (auto const& r : p.relators()) {
          std::vector<std::size_t> cols;
          for (auto const& l : r) {
            cols.push_back(column(l));
          }
          _relators.push_back(std::move(cols));
        }
        new_coset();  // sentinel
        new_coset();  // the identity coset
      }

      CosetTable run(GenIndex generators) {
        for (std::size_t alpha = 1; alpha < _table.size() && !_overflow;
             ++alpha) {
          for (auto const& r : _relators) {
            if (!live(alpha) || _overflow) {
              break;
            }
            scan_and_fill(alpha, r);
          }
          for (std::size_t x = 0; x < _width && live(alpha) && !_overflow; ++x) {
            if (_table[alpha][x] == 0) {
              define(alpha, x);
            }
          }
        }
        return compact(generators);
      }

     private:
      bool live(std::size_t c) const {
        return _parent[c] == c;
      }

      std::size_t new_coset() {
        _table.emplace_back(_width, 0);
        _parent.push_back(_parent.size());
        return _table.size() - 1;
      }

      void define(std::size_t c, std::size_t x) {
        // Index 0 is a sentinel, so _table.size() - 1 cosets exist.
        if (_table.size() - 1 >= _limit) {
          _overflow = true;
          return;
        }
        std::size_t const d      = new_coset();
        _table[c][x]             = d;
        _table[d][inverse_column(x)] = c;
      }

      void scan_and_fill(std::size_t alpha, std::vector<std::size_t> const& w) {
        if (w.empty()) {
          return;
        }
        std::size_t f = alpha, b = alpha;
        std::size_t i = 0;
        std::size_t j = w.size();  // one past the last unscanned letter
        while (true) {
          while (i < j && _table[f][w[i]] != 0) {
            f = _table[f][w[i++]];
          }
          if (i == j) {
            if (f != b) {
              coincidence(f, b);
            }
            return;
          }
          while (j > i && _table[b][inverse_column(w[j - 1])] != 0) {
            b = _table[b][inverse_column(w[--j])];
          }
          if (j == i) {
            coincidence(f, b);
            return;
          }
          if (j == i + 1) {
            _table[f][w[i]]                 = b;
            _table[b][inverse_column(w[i])] = f;
            return;
          }
          define(f, w[i]);
          if (_overflow) {
            return;
          }
        }
      }

      std::size_t rep(std::size_t c) {
        std::size_t root = c;
        while (_parent[root] != root) {
          root = _parent[root];
        }
        while (_parent[c] != root) {
          std::size_t const next = _parent[c];
          _parent[c]             = root;
          c                      = next;
        }
        return root;
      }

      void merge(std::size_t k, std::size_t l) {
        std::size_t const a = rep(k), b = rep(l);
        if (a != b) {
          std::size_t const lo = std::min(a, b), hi = std::max(a, b);
          _parent[hi] = lo;
          _queue.push_back(hi);
        }
      }

      void coincidence(std::size_t a, std::size_t b) {
        _queue.clear();
        merge(a, b);
        for (std::size_t q = 0; q < _queue.size(); ++q) {
          std::size_t const gamma = _queue[q];
          for (std::size_t x = 0; x < _width; ++x) {
            std::size_t const delta = _table[gamma][x];
            if (delta == 0) {
              continue;
            }
            std::size_t const xi = inverse_column(x);
            if (_table[delta][xi] == gamma) {
              _table[delta][xi] = 0;
            }
            std::size_t const mu = rep(gamma), nu = rep(delta);
            if (_table[mu][x] != 0) {
              merge(nu, _table[mu][x]);
            } else if (_table[nu][xi] != 0) {
              merge(mu, _table[nu][xi]);
            } else {
              _table[mu][x]  = nu;
              _table[nu][xi] = mu;
            }
          }
        }
      }

      CosetTable compact(GenIndex generators) {
        std::vector<std::size_t> renumber(_table.size(), 0);
        std::size_t              n = 0;
        for (std::size_t c = 1; c < _table.size(); ++c) {
          if (live(c)) {
            renumber[c] = ++n;
          }
        }
        std::vector<std::vector<std::size_t>> action;
        action.reserve(n);
        for (std::size_t c = 1; c < _table.size(); ++c) {
          if (!live(c)) {
            continue;
          }
          std::vector<std::size_t> row(_width, 0);
          for (std::size_t x = 0; x < _width; ++x) {
            std::size_t const d = _table[c][x];
            row[x]              = d == 0 ? 0 : renumber[rep(d)];
          }
          action.push_back(std::move(row));
        }
        auto const status = _overflow ? CosetTable::Status::Overflow
                                      : CosetTable::Status::Complete;
        return CosetTable(generators, std::move(action), status, _limit);
      }

      std::size_t                           _width;
      std::size_t                           _limit;
      std::vector<std::vector<std::size_t>> _relators;
      std::vector<std::vector<std::size_t>> _table;  // row 0 unused
      std::vector<std::size_t>              _parent;
      std::vector<std::size_t>              _queue;
      bool                                  _overflow = false;
    };

    void check_complete(Presentation const& p, CosetTable const& t) {
      for (std::size_t c = 1; c <= t.cosets(); ++c) {
        for (GenIndex i = 1; i <= p.generators(); ++i) {
          std::size_t const image = t.act(c, Letter{i, 1});
          if (t.act(image, Letter{i, -1}) != c) {
            throw Error(ErrorKind::InvariantViolation,
                        "coset table is not a permutation action");
          }
        }
        for (auto const& r : p.relators()) {
          if (t.act(c, r) != c) {
            throw Error(ErrorKind::InvariantViolation,
                        "relator acts nontrivially on coset " + std::to_string(c));
          }
        }
      }
    }
  }  // namespace

  CosetTable coset_enumerate(Presentation const& p, std::size_t limit) {
    if (limit == 0) {
      throw Error(ErrorKind::BadSelection, "coset limit must be positive");
    }
    CosetTable t = Enumerator(p, limit).run(p.generators());
    if (t.complete()) {
      check_complete(p, t);
    }
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // Fox calculus
  ////////////////////////////////////////////////////////////////////////

  FreeGroupRingElement fox_derivative(Word const& r, GenIndex i) {
    FreeGroupRingElement result;
    std::vector<Letter>  prefix;
    for (auto const& l : r) {
      if (l.index == i) {
        if (l.sign > 0) {
          result[Word(prefix)] += 1;
        } else {
          std::vector<Letter> term = prefix;
          term.push_back(l);
          result[Word(term)] -= 1;
        }
      }
      prefix.push_back(l);
    }
    std::erase_if(result, [](auto const& kv) { return kv.second == 0; });
    return result;
  }

  FreeGroupRingElement add(FreeGroupRingElement const& a,
                           FreeGroupRingElement const& b) {
    FreeGroupRingElement result = a;
    for (auto const& [w, c] : b) {
      result[w] += c;
    }
    std::erase_if(result, [](auto const& kv) { return kv.second == 0; });
    return result;
  }

  FreeGroupRingElement multiply(FreeGroupRingElement const& a,
                                FreeGroupRingElement const& b) {
    FreeGroupRingElement result;
    for (auto const& [u, c] : a) {
      for (auto const& [v, d] : b) {
        result[asphere::multiply(u, v)] += c * d;
      }
    }
    std::erase_if(result, [](auto const& kv) { return kv.second == 0; });
    return result;
  }

  Integer augmentation(FreeGroupRingElement const& a) {
    Integer sum = 0;
    for (auto const& [w, c] : a) {
      sum += c;
    }
    return sum;
  }

  namespace {
    void require_complete(CosetTable const& t) {
      if (!t.complete()) {
        throw Error(ErrorKind::IncompleteTable,
                    "coset enumeration overflowed at "
                        + std::to_string(t.limit()) + " cosets");
      }
    }
  }  // namespace

  FoxMatrix fox_matrix(Presentation const& p, CosetTable const& t) {
    require_complete(t);
    FoxMatrix m(p.generators(),
                std::vector<GroupRingElement>(p.relator_count()));
    for (GenIndex i = 1; i <= p.generators(); ++i) {
      for (std::size_t j = 1; j <= p.relator_count(); ++j) {
        auto& entry = m[i - 1][j - 1];
        for (auto const& [w, c] : fox_derivative(p.relator(j), i)) {
          entry[t.act(1, w)] += c;
        }
        std::erase_if(entry, [](auto const& kv) { return kv.second == 0; });
      }
    }
    return m;
  }

  SparseIntMatrix lifted_boundary(Presentation const& p, CosetTable const& t) {
    require_complete(t);
    std::size_t const N = t.cosets();
    SparseIntMatrix   m(p.generators() * N, p.relator_count() * N);
    for (GenIndex i = 1; i <= p.generators(); ++i) {
      for (std::size_t j = 1; j <= p.relator_count(); ++j) {
        for (auto const& [w, c] : fox_derivative(p.relator(j), i)) {
          for (std::size_t g = 1; g <= N; ++g) {
            m.add((i - 1) * N + t.act(g, w), (j - 1) * N + g, c);
          }
        }
      }
    }
    return m;
  }

  std::string_view to_string(Pi2Verdict::Kind kind) noexcept {
    switch (kind) {
      case Pi2Verdict::Kind::Aspherical:
        return "Aspherical";
      case Pi2Verdict::Kind::NotAspherical:
        return "NotAspherical";
      case Pi2Verdict::Kind::Inconclusive:
        return "Inconclusive";
    }
    return "Inconclusive";
  }

  Pi2Verdict asphericity_verdict(Presentation const& p, std::size_t limit) {
    Pi2Verdict v;
    if (p.relator_count() == 0) {
      v.kind   = Pi2Verdict::Kind::Aspherical;
      v.reason = "no relators: the complex is a graph";
      return v;
    }
    v.table = coset_enumerate(p, limit);
    if (!v.table->complete()) {
      v.kind   = Pi2Verdict::Kind::Inconclusive;
      v.reason = "coset enumeration overflowed";
      return v;
    }
    auto const m      = lifted_boundary(p, *v.table);
    auto const kernel = integer_kernel(m);
    v.kernel_rank     = kernel.size();
    if (!kernel.empty()) {
      v.witness = kernel.front();
      auto const image = multiply(m, v.witness);
      bool const zero  = std::all_of(image.begin(), image.end(),
                                    [](Integer const& x) { return x == 0; });
      bool const nonzero_witness = std::any_of(
          v.witness.begin(), v.witness.end(), [](Integer const& x) { return x != 0; });
      if (!zero || !nonzero_witness) {
        throw Error(ErrorKind::InvariantViolation,
                    "kernel witness does not lie in the kernel");
      }
      v.kind   = Pi2Verdict::Kind::NotAspherical;
      v.reason = "lifted boundary has a nonzero integer kernel";
    } else if (v.table->cosets() == 1) {
      v.kind   = Pi2Verdict::Kind::Aspherical;
      v.reason = "trivial group and injective boundary: contractible";
    } else {
      v.kind   = Pi2Verdict::Kind::Inconclusive;
      v.reason = "finite nontrivial group with zero rational kernel";
    }
    return v;
  }

}  // namespace asphere
