#include "autgrp/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "autgrp/error.hpp"

namespace autgrp {

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Letter> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Letter>(i + 1);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<Letter> images) {
  std::vector<bool> seen(images.size(), false);
  for (Letter y : images) {
    if (y < 1 || y > images.size()) {
      throw Error(ErrorKind::letter_out_of_range,
                  "image " + std::to_string(y) + " outside 1.." +
                      std::to_string(images.size()));
    }
    if (seen[y - 1]) {
      throw Error(ErrorKind::repeated_letter,
                  "letter " + std::to_string(y) + " appears twice");
    }
    seen[y - 1] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(
    std::size_t degree, std::vector<std::vector<Letter>> const& cycles) {
  auto result = identity(degree);
  std::vector<bool> used(degree, false);
  for (auto const& cycle : cycles) {
    for (Letter x : cycle) {
      if (x < 1 || x > degree) {
        throw Error(ErrorKind::letter_out_of_range,
                    "letter " + std::to_string(x) + " outside 1.." +
                        std::to_string(degree));
      }
      if (used[x - 1]) {
        throw Error(ErrorKind::repeated_letter,
                    "letter " + std::to_string(x) + " appears twice");
      }
      used[x - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      result.images_[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
    }
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

std::vector<std::vector<Letter>> Permutation::cycles() const {
  std::vector<std::vector<Letter>> result;
  std::vector<bool> done(images_.size(), false);
  // Visiting letters in increasing order yields cycles already rotated to
  // their minimum and sorted by it.
  for (Letter x = 1; x <= images_.size(); ++x) {
    if (done[x - 1] || (*this)(x) == x) continue;
    std::vector<Letter> cycle;
    for (Letter y = x; !done[y - 1]; y = (*this)(y)) {
      done[y - 1] = true;
      cycle.push_back(y);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

Permutation compose(Permutation const& p, Permutation const& q) {
  if (p.degree() != q.degree()) {
    throw Error(ErrorKind::size_mismatch,
                "cannot compose permutations of degree " +
                    std::to_string(p.degree()) + " and " +
                    std::to_string(q.degree()));
  }
  std::vector<Letter> images(p.degree());
  for (Letter x = 1; x <= p.degree(); ++x) images[x - 1] = q(p(x));
  return Permutation::from_images(std::move(images));
}

Permutation invert(Permutation const& p) {
  std::vector<Letter> images(p.degree());
  for (Letter x = 1; x <= p.degree(); ++x) images[p(x) - 1] = x;
  return Permutation::from_images(std::move(images));
}

namespace {

Letter parse_letter(std::string_view digits, std::size_t degree) {
  if (digits.empty()) throw Error(ErrorKind::syntax, "empty letter in cycle");
  Letter value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::syntax,
                  "unexpected character '" + std::string(1, c) + "' in cycle");
    }
    value = value * 10 + static_cast<Letter>(c - '0');
    if (value > degree) break;
  }
  if (value < 1 || value > degree) {
    throw Error(ErrorKind::letter_out_of_range,
                "letter " + std::string(digits) + " outside 1.." +
                    std::to_string(degree));
  }
  return value;
}

}  // namespace

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact == "id") return Permutation::identity(degree);
  if (compact.empty()) throw Error(ErrorKind::syntax, "empty permutation");

  std::vector<std::vector<Letter>> cycles;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    if (compact[pos] != '(') {
      throw Error(ErrorKind::syntax, "expected '(' in permutation '" +
                                         std::string(text) + "'");
    }
    auto close = compact.find(')', pos);
    if (close == std::string::npos) {
      throw Error(ErrorKind::syntax, "unterminated cycle in permutation '" +
                                         std::string(text) + "'");
    }
    std::string_view body(compact.data() + pos + 1, close - pos - 1);
    if (body.empty()) throw Error(ErrorKind::syntax, "empty cycle");

    std::vector<Letter> cycle;
    if (body.find(',') != std::string_view::npos) {
      std::size_t start = 0;
      while (true) {
        auto comma = body.find(',', start);
        cycle.push_back(parse_letter(body.substr(start, comma - start), degree));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    } else {
      for (std::size_t i = 0; i < body.size(); ++i) {
        cycle.push_back(parse_letter(body.substr(i, 1), degree));
      }
    }
    cycles.push_back(std::move(cycle));
    pos = close + 1;
  }
  return Permutation::from_cycles(degree, cycles);
}

std::string to_string(Permutation const& p) {
  auto cycles = p.cycles();
  if (cycles.empty()) return "id";
  bool const wide = p.degree() > 9;
  std::string out;
  for (auto const& cycle : cycles) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (wide && i > 0) out += ',';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

}  // namespace autgrp
