#include "besse/seifert.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace besse {

std::string_view to_string(InputError kind) {
  switch (kind) {
    case InputError::NonPositiveMultiplicity: return "NonPositiveMultiplicity";
    case InputError::NotCoprime: return "NotCoprime";
    case InputError::Malformed: return "Malformed";
  }
  return "Unknown";
}

SeifertInvariants validate(std::int64_t genus, std::vector<SeifertPair> pairs) {
  for (const auto& p : pairs) {
    if (p.a <= 0)
      throw InvalidInput(InputError::NonPositiveMultiplicity,
                         "multiplicity must be positive, got (" + std::to_string(p.a) + "," +
                             std::to_string(p.b) + ")");
    if (p.a >= 2 && std::gcd(p.a, p.b) != 1)
      throw InvalidInput(InputError::NotCoprime, "pair (" + std::to_string(p.a) + "," +
                                                     std::to_string(p.b) + ") is not coprime");
  }
  return SeifertInvariants(genus, std::move(pairs));
}

std::string SeifertInvariants::to_string() const {
  std::string out = std::to_string(genus_) + ";";
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) out += ',';
    out += '(' + std::to_string(pairs_[i].a) + ',' + std::to_string(pairs_[i].b) + ')';
  }
  return out;
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) text_ += c;
  }

  bool done() const { return pos_ == text_.size(); }
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t integer() {
    std::size_t start = pos_;
    if (peek('+')) ++pos_;
    std::int64_t value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    if (pos_ < text_.size() && text_[pos_] == '-' && start != pos_) fail("expected integer");
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{}) fail("expected integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::string token = pos_ < text_.size() ? text_.substr(pos_, 8) : "<end>";
    throw InvalidInput(InputError::Malformed,
                       what + " at '" + token + "'; expected grammar g;(a1,b1),(a2,b2),...");
  }

 private:
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

SeifertInvariants parse_seifert(std::string_view text) {
  Scanner in(text);
  std::int64_t genus = in.integer();
  in.expect(';');
  std::vector<SeifertPair> pairs;
  while (!in.done()) {
    if (!pairs.empty()) in.expect(',');
    in.expect('(');
    SeifertPair p;
    p.a = in.integer();
    in.expect(',');
    p.b = in.integer();
    in.expect(')');
    pairs.push_back(p);
  }
  return validate(genus, std::move(pairs));
}

Rational euler_number(const SeifertInvariants& s) {
  Rational sum;
  for (const auto& p : s.pairs()) sum += Rational(p.b, p.a);
  return -sum;
}

SeifertInvariants normalize(const SeifertInvariants& s) {
  std::int64_t integral = 0;
  std::vector<SeifertPair> exceptional;
  for (const auto& p : s.pairs()) {
    std::int64_t q = floor_div(p.b, p.a);
    std::int64_t r = p.b - q * p.a;
    integral += q;
    // gcd(a, b) == 1 with a >= 2 forces r != 0; only a == 1 leaves r == 0.
    if (p.a >= 2) exceptional.push_back({p.a, r});
  }
  std::sort(exceptional.begin(), exceptional.end());
  std::vector<SeifertPair> pairs;
  pairs.reserve(exceptional.size() + 1);
  pairs.push_back({1, integral});
  pairs.insert(pairs.end(), exceptional.begin(), exceptional.end());
  return validate(s.genus(), std::move(pairs));
}

SeifertInvariants reverse_orientation(const SeifertInvariants& s) {
  std::vector<SeifertPair> pairs(s.pairs().begin(), s.pairs().end());
  for (auto& p : pairs) p.b = -p.b;
  return validate(s.genus(), std::move(pairs));
}

bool equivalent(const SeifertInvariants& s1, const SeifertInvariants& s2, bool allow_reversal) {
  if (s1.genus() != s2.genus()) return false;
  auto n1 = normalize(s1);
  if (n1 == normalize(s2)) return true;
  return allow_reversal && n1 == normalize(reverse_orientation(s2));
}

namespace moves {

namespace {

std::vector<SeifertPair> copy_pairs(const SeifertInvariants& s) {
  return {s.pairs().begin(), s.pairs().end()};
}

void check_index(const SeifertInvariants& s, std::size_t i) {
  if (i >= s.pairs().size()) throw std::out_of_range("pair index out of range");
}

}  // namespace

SeifertInvariants swap_pairs(const SeifertInvariants& s, std::size_t i, std::size_t j) {
  check_index(s, i);
  check_index(s, j);
  auto pairs = copy_pairs(s);
  std::swap(pairs[i], pairs[j]);
  return validate(s.genus(), std::move(pairs));
}

SeifertInvariants insert_trivial(const SeifertInvariants& s) {
  auto pairs = copy_pairs(s);
  pairs.push_back({1, 0});
  return validate(s.genus(), std::move(pairs));
}

SeifertInvariants remove_trivial(const SeifertInvariants& s, std::size_t i) {
  check_index(s, i);
  if (s.pairs()[i] != SeifertPair{1, 0})
    throw std::invalid_argument("only a (1,0) pair can be removed");
  auto pairs = copy_pairs(s);
  pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(i));
  return validate(s.genus(), std::move(pairs));
}

SeifertInvariants shift_twist(const SeifertInvariants& s, std::size_t i, std::size_t j) {
  check_index(s, i);
  check_index(s, j);
  if (i == j) throw std::invalid_argument("shift_twist needs two distinct pairs");
  auto pairs = copy_pairs(s);
  pairs[i].b += pairs[i].a;
  pairs[j].b -= pairs[j].a;
  return validate(s.genus(), std::move(pairs));
}

}  // namespace moves

}  // namespace besse
