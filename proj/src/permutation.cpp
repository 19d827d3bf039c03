#include "qsemi/permutation.hpp"

#include <numeric>  // for iota
#include <string>   // for string, to_string

#include "qsemi/errors.hpp"  // for InvalidArgument

namespace qsemi {

  Permutation::Permutation(std::vector<letter_type> images)
      : _images(std::move(images)) {
    std::size_t const n = _images.size();
    if (n > max_degree) {
      throw InvalidArgument("permutation degree " + std::to_string(n)
                            + " exceeds " + std::to_string(max_degree));
    }
    std::vector<bool> seen(n + 1, false);
    for (auto x : _images) {
      if (x < 1 || x > n || seen[x]) {
        throw InvalidArgument("image table is not a bijection of {1, ..., "
                              + std::to_string(n) + "}");
      }
      seen[x] = true;
    }
  }

  Permutation Permutation::identity(std::size_t n) {
    std::vector<letter_type> img(n);
    std::iota(img.begin(), img.end(), letter_type(1));
    return Permutation(std::move(img));
  }

  Permutation
  Permutation::from_cycles(std::size_t                                   n,
                           std::vector<std::vector<std::size_t>> const& cycles) {
    if (n > max_degree) {
      throw InvalidArgument("degree too large");
    }
    std::vector<letter_type> img(n);
    std::iota(img.begin(), img.end(), letter_type(1));
    std::vector<bool> used(n + 1, false);
    for (auto const& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        std::size_t a = c[i];
        std::size_t b = c[(i + 1) % c.size()];
        if (a < 1 || a > n || b < 1 || b > n || used[a]) {
          throw InvalidArgument("cycles are not disjoint cycles on {1, ..., "
                                + std::to_string(n) + "}");
        }
        used[a]    = true;
        img[a - 1] = static_cast<letter_type>(b);
      }
    }
    return Permutation(std::move(img));
  }

  Permutation Permutation::inverse() const {
    std::vector<letter_type> inv(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i) {
      inv[_images[i] - 1] = static_cast<letter_type>(i + 1);
    }
    Permutation result;
    result._images = std::move(inv);
    return result;
  }

  bool Permutation::is_identity() const noexcept {
    return number_of_fixed_points() == _images.size();
  }

  std::size_t Permutation::number_of_fixed_points() const noexcept {
    std::size_t count = 0;
    for (std::size_t i = 0; i < _images.size(); ++i) {
      count += (_images[i] == i + 1);
    }
    return count;
  }

  std::string Permutation::cycle_string() const {
    std::string       out;
    std::vector<bool> seen(_images.size() + 1, false);
    for (std::size_t start = 1; start <= _images.size(); ++start) {
      if (seen[start] || _images[start - 1] == start) {
        continue;
      }
      out += '(';
      std::size_t x = start;
      do {
        if (x != start) {
          out += ' ';
        }
        out += std::to_string(x);
        seen[x] = true;
        x       = _images[x - 1];
      } while (x != start);
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  std::string Permutation::image_string() const {
    std::string out;
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += std::to_string(_images[i]);
    }
    return out;
  }

  Permutation operator*(Permutation const& a, Permutation const& b) {
    if (a.degree() != b.degree()) {
      throw InvalidArgument("cannot compose permutations of different degree");
    }
    std::vector<letter_type> img(a.degree());
    for (std::size_t i = 0; i < img.size(); ++i) {
      img[i] = a._images[b._images[i] - 1];
    }
    Permutation result;
    result._images = std::move(img);
    return result;
  }

  std::size_t hash_letters(std::span<letter_type const> s) noexcept {
    // FNV-1a
    std::size_t h = 14695981039346656037ULL;
    for (auto x : s) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h;
  }

}  // namespace qsemi
