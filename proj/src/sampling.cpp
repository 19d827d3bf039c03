#include "qsemi/sampling.hpp"

#include <vector>  // for vector

namespace qsemi {

  Word WordGenerator::uniform(std::size_t len) {
    std::vector<letter_type> out(len);
    for (auto& x : out) {
      x = static_cast<letter_type>(below(_alphabet) + 1);
    }
    return Word(std::move(out));
  }

  Word WordGenerator::biased(std::size_t max_len) {
    return biased_exact(below(max_len + 1));
  }

  Word WordGenerator::biased_exact(std::size_t len) {
    std::vector<letter_type> out;
    out.reserve(len);
    while (out.size() < len) {
      std::size_t const room = len - out.size();
      if (_relations == nullptr || below(2) == 0) {
        out.push_back(static_cast<letter_type>(below(_alphabet) + 1));
        continue;
      }
      auto const        img = (*_relations)[below(_relations->size())].images();
      std::size_t const n   = img.size();
      if (room >= n) {
        out.insert(out.end(), img.begin(), img.end());
      } else if (out.empty()) {
        // a suffix, so that the piece may complete a relation word on the left
        out.insert(out.end(), img.end() - room, img.end());
      } else {
        out.insert(out.end(), img.begin(), img.begin() + room);
      }
    }
    return Word(std::move(out));
  }

}  // namespace qsemi
