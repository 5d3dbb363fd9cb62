#include "braidquot/permutation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace braidquot {

Permutation::Permutation(std::uint32_t degree)
: _images(degree)
{ std::iota(_images.begin(), _images.end(), 0u); }

Permutation::Permutation(std::vector<std::uint32_t> images)
: _images(std::move(images))
{
  std::vector<bool> seen(_images.size(), false);
  for (auto x : _images) {
    if (x >= _images.size() || seen[x])
      throw std::invalid_argument("image array is not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::transposition(std::uint32_t degree, std::uint32_t a,
                                       std::uint32_t b)
{
  if (a < 1 || b < 1 || a > degree || b > degree)
    throw std::out_of_range("transposition point outside 1..degree");
  Permutation p(degree);
  std::swap(p._images[a - 1], p._images[b - 1]);
  return p;
}

bool Permutation::is_identity() const noexcept
{
  for (std::uint32_t i = 0; i < _images.size(); ++i) {
    if (_images[i] != i)
      return false;
  }
  return true;
}

Permutation Permutation::inverse() const
{
  std::vector<std::uint32_t> inv(_images.size());
  for (std::uint32_t i = 0; i < _images.size(); ++i)
    inv[_images[i]] = i;
  Permutation p;
  p._images = std::move(inv);
  return p;
}

std::uint64_t Permutation::order() const
{
  std::vector<bool> seen(_images.size(), false);
  std::uint64_t result = 1;
  for (std::uint32_t i = 0; i < _images.size(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    for (std::uint32_t x = i; !seen[x]; x = _images[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation operator*(Permutation const &lhs, Permutation const &rhs)
{
  if (lhs.degree() != rhs.degree())
    throw std::invalid_argument("permutation degrees differ");
  Permutation p;
  p._images.resize(lhs._images.size());
  for (std::uint32_t i = 0; i < lhs._images.size(); ++i)
    p._images[i] = rhs._images[lhs._images[i]];
  return p;
}

std::string to_cycle_string(Permutation const &p)
{
  std::ostringstream ss;
  std::vector<bool> seen(p.degree(), false);
  for (std::uint32_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p(i) == i)
      continue;
    ss << '(';
    for (std::uint32_t x = i; !seen[x]; x = p(x)) {
      seen[x] = true;
      ss << (x == i ? "" : " ") << x + 1;
    }
    ss << ')';
  }
  auto s = ss.str();
  return s.empty() ? "()" : s;
}

} // namespace braidquot
