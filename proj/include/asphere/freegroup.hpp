#ifndef ASPHERE_FREEGROUP_HPP_
#define ASPHERE_FREEGROUP_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <span>
#include <vector>

namespace asphere {

  // Generator x_i of a countably generated free group; indices start at 1.
  using GenIndex = std::uint32_t;

  struct Letter {
    GenIndex index = 1;
    int      sign  = 1;

    constexpr Letter inverse() const noexcept {
      return Letter{index, -sign};
    }

    constexpr bool cancels(Letter const& other) const noexcept {
      return index == other.index && sign == -other.sign;
    }

    friend constexpr auto operator<=>(Letter const&, Letter const&) = default;
  };

  // Checked constructor: index >= 1 and sign in {+1, -1}.
  Letter make_letter(GenIndex index, int sign = 1);

  // A freely reduced word. Every constructor reduces its input.
  class Word {
   public:
    Word() = default;
    explicit Word(std::span<Letter const> raw);
    explicit Word(std::vector<Letter> raw);
    Word(std::initializer_list<Letter> raw);

    static Word generator(GenIndex index, int sign = 1);

    std::span<Letter const> letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Letter const& operator[](std::size_t pos) const noexcept {
      return _letters[pos];
    }
    auto begin() const noexcept {
      return _letters.cbegin();
    }
    auto end() const noexcept {
      return _letters.cend();
    }

    // Largest generator index occurring, 0 for the identity.
    GenIndex max_index() const noexcept;

    bool uses(GenIndex index) const noexcept;

    friend bool operator==(Word const&, Word const&) = default;
    friend auto operator<=>(Word const&, Word const&) = default;

   private:
    std::vector<Letter> _letters;
  };

  // Stack-based free reduction.
  Word reduce(std::span<Letter const> raw);

  Word multiply(Word const& u, Word const& v);
  Word invert(Word const& u);
  Word power(Word const& u, long long exponent);
  // [u, v] = u v u^-1 v^-1
  Word commutator(Word const& u, Word const& v);

  long long exponent_sum(Word const& w, GenIndex index);
  // Nonzero exponent sums only.
  std::map<GenIndex, long long> exponent_vector(Word const& w);

  class NielsenMove {
   public:
    enum class Kind { Swap, Invert, RightMultiply };

    // x_i <-> x_j
    static NielsenMove swap(GenIndex i, GenIndex j);
    // x_i -> x_i^-1
    static NielsenMove invert(GenIndex i);
    // x_i -> x_i x_j, requires i != j
    static NielsenMove right_multiply(GenIndex i, GenIndex j);

    Kind kind() const noexcept {
      return _kind;
    }
    GenIndex first() const noexcept {
      return _i;
    }
    // Equal to first() for Invert.
    GenIndex second() const noexcept {
      return _j;
    }

    // Moves whose left-to-right application undoes this one. RightMultiply
    // (i, j) is undone by Invert(j), RightMultiply(i, j), Invert(j).
    std::vector<NielsenMove> inverse() const;

    friend bool operator==(NielsenMove const&, NielsenMove const&) = default;

   private:
    NielsenMove(Kind kind, GenIndex i, GenIndex j) : _kind(kind), _i(i), _j(j) {}

    Kind     _kind;
    GenIndex _i;
    GenIndex _j;
  };

  Word apply_move(NielsenMove const& move, Word const& w);

  // A finite sequence of Nielsen moves applied left to right.
  class BaseChange {
   public:
    BaseChange() = default;
    explicit BaseChange(std::vector<NielsenMove> moves)
        : _moves(std::move(moves)) {}

    void push_back(NielsenMove const& move) {
      _moves.push_back(move);
    }
    void append(BaseChange const& other);

    std::vector<NielsenMove> const& moves() const noexcept {
      return _moves;
    }
    std::size_t size() const noexcept {
      return _moves.size();
    }
    bool empty() const noexcept {
      return _moves.empty();
    }

    std::set<GenIndex> support() const;
    BaseChange         inverse() const;

    friend bool operator==(BaseChange const&, BaseChange const&) = default;

   private:
    std::vector<NielsenMove> _moves;
  };

  Word apply_base_change(BaseChange const& bc, Word const& w);

}  // namespace asphere

#endif  // ASPHERE_FREEGROUP_HPP_
