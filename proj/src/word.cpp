#include "qsemi/word.hpp"

#include <algorithm>     // for max_element
#include <cctype>        // for isspace
#include <charconv>      // for from_chars
#include <system_error>  // for errc

#include "qsemi/errors.hpp"  // for InvalidArgument

namespace qsemi {

  letter_type Word::max_letter() const noexcept {
    return _letters.empty() ? 0 : *std::max_element(_letters.begin(), _letters.end());
  }

  bool shortlex_less(Word const& a, Word const& b) noexcept {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a < b;
  }

  Word mirror(Word const& w, std::size_t n) {
    std::vector<letter_type> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      out[w.size() - 1 - i] = static_cast<letter_type>(n + 1 - w[i]);
    }
    return Word(std::move(out));
  }

  std::string to_string(Word const& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += std::to_string(w[i]);
    }
    return out;
  }

  namespace {
    std::string_view strip(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }
  }  // namespace

  Word parse_word(std::string_view text, std::size_t n) {
    std::vector<letter_type> letters;
    if (strip(text).empty()) {
      return Word();
    }
    std::size_t pos = 0;
    while (true) {
      std::size_t end   = text.find(',', pos);
      auto        token = strip(text.substr(
          pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
      std::size_t value = 0;
      auto [ptr, ec]    = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
        throw InvalidArgument("malformed word \"" + std::string(text) + "\"");
      }
      if (value < 1 || value > n) {
        throw InvalidArgument("letter " + std::to_string(value)
                              + " outside {1, ..., " + std::to_string(n) + "}");
      }
      letters.push_back(static_cast<letter_type>(value));
      if (end == std::string_view::npos) {
        break;
      }
      pos = end + 1;
    }
    return Word(std::move(letters));
  }

}  // namespace qsemi
