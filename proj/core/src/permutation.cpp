#include "permknot/permutation.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace permknot {

namespace {

void validate_one_line(const std::vector<int>& entries) {
  const int n = static_cast<int>(entries.size());
  if (n == 0) {
    throw std::invalid_argument("permutation: empty sequence (S_0 is excluded, minimum size is 1)");
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : entries) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("permutation: value " + std::to_string(v) +
                                  " out of range 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("permutation: duplicate value " + std::to_string(v));
    }
    seen[static_cast<std::size_t>(v - 1)] = 1;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : entries_(std::move(one_line)) {
  validate_one_line(entries_);
}

Permutation::Permutation(unchecked_t, std::vector<int> one_line) noexcept
    : entries_(std::move(one_line)) {}

Permutation Permutation::identity(int n) {
  if (n < 1) {
    throw std::invalid_argument("permutation: size must be at least 1");
  }
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(unchecked, std::move(e));
}

int Permutation::operator()(int i) const {
  if (i < 1 || i > size()) {
    throw std::out_of_range("permutation: position " + std::to_string(i) +
                            " out of range 1.." + std::to_string(size()));
  }
  return entries_[static_cast<std::size_t>(i - 1)];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(entries_.size());
  for (int i = 0; i < size(); ++i) {
    inv[static_cast<std::size_t>(entries_[static_cast<std::size_t>(i)] - 1)] = i + 1;
  }
  return Permutation(unchecked, std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (int i = 0; i < size(); ++i) {
    if (entries_[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return true;
}

Transposition::Transposition(int i_, int j_) : i(i_), j(j_) {
  if (i < 1 || i >= j) {
    throw std::invalid_argument("transposition: requires 1 <= i < j");
  }
}

Permutation Transposition::as_permutation(int n) const {
  if (n < j) {
    throw std::invalid_argument("transposition: t_{i,j} does not fit in S_n with n < j");
  }
  Permutation w = Permutation::identity(n);
  std::vector<int> e = w.entries();
  std::swap(e[static_cast<std::size_t>(i - 1)], e[static_cast<std::size_t>(j - 1)]);
  return Permutation(Permutation::unchecked, std::move(e));
}

CycleDecomposition cycle_decomposition(const Permutation& w) {
  const int n = w.size();
  const std::vector<int>& e = w.entries();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  CycleDecomposition d;
  // Scanning starts in increasing order, so each cycle begins at its smallest
  // element and cycles come out sorted by that element.
  for (int s = 1; s <= n; ++s) {
    if (seen[static_cast<std::size_t>(s - 1)]) continue;
    std::vector<int> cycle;
    int x = s;
    while (!seen[static_cast<std::size_t>(x - 1)]) {
      seen[static_cast<std::size_t>(x - 1)] = 1;
      cycle.push_back(x);
      x = e[static_cast<std::size_t>(x - 1)];
    }
    d.cycles.push_back(std::move(cycle));
  }
  return d;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

int parse_int_token(std::string_view tok) {
  int value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw std::invalid_argument("permutation: cannot parse entry '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
  // Trim surrounding whitespace.
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t' || text.front() == '\n' ||
                           text.front() == '\r')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\n' ||
                           text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) {
    throw std::invalid_argument("permutation: empty input");
  }

  std::vector<int> entries;
  if (text.find(',') != std::string_view::npos) {
    // Comma-separated: fields may carry surrounding blanks but not be empty,
    // so stray or doubled commas are rejected.
    std::size_t pos = 0;
    while (true) {
      const std::size_t next = text.find(',', pos);
      std::string_view field =
          text.substr(pos, (next == std::string_view::npos ? text.size() : next) - pos);
      while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) {
        field.remove_prefix(1);
      }
      while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) {
        field.remove_suffix(1);
      }
      if (field.empty()) {
        throw std::invalid_argument("permutation: empty entry in comma-separated input");
      }
      entries.push_back(parse_int_token(field));
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
  } else if (text.find_first_of(" \t") != std::string_view::npos) {
    // Whitespace-separated: runs of blanks count as one separator.
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t next = text.find_first_of(" \t", pos);
      if (next == std::string_view::npos) next = text.size();
      if (next > pos) {
        entries.push_back(parse_int_token(text.substr(pos, next - pos)));
      }
      pos = next + 1;
    }
  } else if (all_digits(text)) {
    if (text.size() == 1) {
      entries.push_back(text[0] - '0');
    } else {
      // Compact form: one digit per entry, so only valid for n <= 9.
      for (char c : text) {
        entries.push_back(c - '0');
      }
    }
  } else {
    throw std::invalid_argument("permutation: cannot parse '" + std::string(text) + "'");
  }
  return Permutation(std::move(entries));
}

std::string to_string(const Permutation& w) {
  std::ostringstream out;
  const std::vector<int>& e = w.entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i > 0) out << ',';
    out << e[i];
  }
  return out.str();
}

}  // namespace permknot
