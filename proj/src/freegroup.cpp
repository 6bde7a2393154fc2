#include "asphere/freegroup.hpp"

#include <algorithm>
#include <string>

#include "asphere/error.hpp"

namespace asphere {

  Letter make_letter(GenIndex index, int sign) {
    if (index == 0) {
      throw Error(ErrorKind::InvalidPresentation,
                  "generator indices start at 1");
    }
    if (sign != 1 && sign != -1) {
      throw Error(ErrorKind::InvalidPresentation,
                  "letter sign must be +1 or -1, got " + std::to_string(sign));
    }
    return Letter{index, sign};
  }

  namespace {
    void push_reduced(std::vector<Letter>& out, Letter const& l) {
      if (!out.empty() && out.back().cancels(l)) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
  }  // namespace

  Word::Word(std::span<Letter const> raw) {
    _letters.reserve(raw.size());
    for (auto const& l : raw) {
      push_reduced(_letters, make_letter(l.index, l.sign));
    }
  }

  Word::Word(std::vector<Letter> raw) : Word(std::span<Letter const>(raw)) {}

  Word::Word(std::initializer_list<Letter> raw)
      : Word(std::span<Letter const>(raw.begin(), raw.size())) {}

  Word Word::generator(GenIndex index, int sign) {
    Word w;
    w._letters.push_back(make_letter(index, sign));
    return w;
  }

  GenIndex Word::max_index() const noexcept {
    GenIndex result = 0;
    for (auto const& l : _letters) {
      result = std::max(result, l.index);
    }
    return result;
  }

  bool Word::uses(GenIndex index) const noexcept {
    return std::any_of(_letters.begin(), _letters.end(), [index](Letter l) {
      return l.index == index;
    });
  }

  Word reduce(std::span<Letter const> raw) {
    return Word(raw);
  }

  Word multiply(Word const& u, Word const& v) {
    std::vector<Letter> raw(u.begin(), u.end());
    raw.insert(raw.end(), v.begin(), v.end());
    return Word(std::move(raw));
  }

  Word invert(Word const& u) {
    std::vector<Letter> raw;
    raw.reserve(u.size());
    for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
      raw.push_back(it->inverse());
    }
    return Word(std::move(raw));
  }

  Word power(Word const& u, long long exponent) {
    Word const base = exponent < 0 ? invert(u) : u;
    auto const count = exponent < 0 ? -exponent : exponent;
    std::vector<Letter> raw;
    raw.reserve(base.size() * static_cast<std::size_t>(count));
    for (long long k = 0; k < count; ++k) {
      raw.insert(raw.end(), base.begin(), base.end());
    }
    return Word(std::move(raw));
  }

  Word commutator(Word const& u, Word const& v) {
    return multiply(multiply(u, v), multiply(invert(u), invert(v)));
  }

  long long exponent_sum(Word const& w, GenIndex index) {
    long long sum = 0;
    for (auto const& l : w) {
      if (l.index == index) {
        sum += l.sign;
      }
    }
    return sum;
  }

  std::map<GenIndex, long long> exponent_vector(Word const& w) {
    std::map<GenIndex, long long> result;
    for (auto const& l : w) {
      result[l.index] += l.sign;
    }
    std::erase_if(result, [](auto const& kv) { return kv.second == 0; });
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // NielsenMove
  ////////////////////////////////////////////////////////////////////////

  NielsenMove NielsenMove::swap(GenIndex i, GenIndex j) {
    make_letter(i);
    make_letter(j);
    return NielsenMove(Kind::Swap, i, j);
  }

  NielsenMove NielsenMove::invert(GenIndex i) {
    make_letter(i);
    return NielsenMove(Kind::Invert, i, i);
  }

  NielsenMove NielsenMove::right_multiply(GenIndex i, GenIndex j) {
    make_letter(i);
    make_letter(j);
    if (i == j) {
      throw Error(ErrorKind::InvalidPresentation,
                  "RightMultiply requires distinct generators");
    }
    return NielsenMove(Kind::RightMultiply, i, j);
  }

  std::vector<NielsenMove> NielsenMove::inverse() const {
    switch (_kind) {
      case Kind::Swap:
      case Kind::Invert:
        return {*this};
      case Kind::RightMultiply:
        return {invert(_j), *this, invert(_j)};
    }
    return {};
  }

  Word apply_move(NielsenMove const& move, Word const& w) {
    GenIndex const i = move.first();
    GenIndex const j = move.second();
    std::vector<Letter> raw;
    raw.reserve(w.size() + 4);
    for (auto const& l : w) {
      switch (move.kind()) {
        case NielsenMove::Kind::Swap:
          if (l.index == i) {
            raw.push_back(Letter{j, l.sign});
          } else if (l.index == j) {
            raw.push_back(Letter{i, l.sign});
          } else {
            raw.push_back(l);
          }
          break;
        case NielsenMove::Kind::Invert:
          raw.push_back(l.index == i ? l.inverse() : l);
          break;
        case NielsenMove::Kind::RightMultiply:
          if (l.index != i) {
            raw.push_back(l);
          } else if (l.sign > 0) {
            raw.push_back(Letter{i, 1});
            raw.push_back(Letter{j, 1});
          } else {
            raw.push_back(Letter{j, -1});
            raw.push_back(Letter{i, -1});
          }
          break;
      }
    }
    return Word(std::move(raw));
  }

  ////////////////////////////////////////////////////////////////////////
  // BaseChange
  ////////////////////////////////////////////////////////////////////////

  void BaseChange::append(BaseChange const& other) {
    _moves.insert(_moves.end(), other._moves.begin(), other._moves.end());
  }

  std::set<GenIndex> BaseChange::support() const {
    std::set<GenIndex> result;
    for (auto const& m : _moves) {
      result.insert(m.first());
      result.insert(m.second());
    }
    return result;
  }

  BaseChange BaseChange::inverse() const {
    BaseChange result;
    for (auto it = _moves.rbegin(); it != _moves.rend(); ++it) {
      for (auto const& m : it->inverse()) {
        result.push_back(m);
      }
    }
    return result;
  }

  Word apply_base_change(BaseChange const& bc, Word const& w) {
    Word result = w;
    for (auto const& m : bc.moves()) {
      result = apply_move(m, result);
    }
    return result;
  }

}  // namespace asphere
