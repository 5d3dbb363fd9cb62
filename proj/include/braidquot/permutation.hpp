#ifndef BRAIDQUOT_PERMUTATION_HPP
#define BRAIDQUOT_PERMUTATION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace braidquot {

/// Permutation of {1, ..., degree}, stored 0-based as an image array.
///
/// Products compose left to right: (a * b)(x) = b(a(x)), the convention
/// used for coset actions where a word is read from the left.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::uint32_t degree);  // identity
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation transposition(std::uint32_t degree, std::uint32_t a,
                                   std::uint32_t b);  // 1-based points

  std::uint32_t degree() const noexcept
  { return static_cast<std::uint32_t>(_images.size()); }

  // 0-based image of a 0-based point
  std::uint32_t operator()(std::uint32_t x) const { return _images[x]; }
  std::vector<std::uint32_t> const &images() const noexcept { return _images; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  // Multiplicative order; lcm of cycle lengths.
  std::uint64_t order() const;

  friend Permutation operator*(Permutation const &lhs, Permutation const &rhs);
  friend bool operator==(Permutation const &, Permutation const &) = default;

private:
  std::vector<std::uint32_t> _images;
};

// 1-based cycle notation, e.g. "(1 2)(3 5 4)"; "()" for the identity.
std::string to_cycle_string(Permutation const &p);

} // namespace braidquot

#endif // BRAIDQUOT_PERMUTATION_HPP
