#include "coxforge/permutation.hpp"

#include <cctype>
#include <numeric>
#include <set>

namespace coxforge {

Permutation::Permutation(int n) {
  if (n < 0) throw InvalidArgument("permutation size must be >= 0");
  img_.resize(static_cast<std::size_t>(n));
  std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v - 1)])
      throw InvalidArgument("image list is not a permutation");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  Permutation p;
  p.img_ = std::move(images);
  return p;
}

Permutation Permutation::parse(const std::string& text, int n) {
  Permutation p(n);
  std::string s;
  for (char ch : text) s += ch;
  auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) throw ParseError("empty permutation");
  std::string trimmed = s.substr(first, s.find_last_not_of(" \t") - first + 1);
  if (trimmed == "id" || trimmed == "e" || trimmed == "()") return p;

  std::size_t pos = 0;
  while (pos < trimmed.size()) {
    if (std::isspace(static_cast<unsigned char>(trimmed[pos]))) {
      ++pos;
      continue;
    }
    if (trimmed[pos] != '(') throw ParseError("expected '(' in permutation '" + text + "'");
    auto close = trimmed.find(')', pos);
    if (close == std::string::npos) throw ParseError("unclosed cycle in '" + text + "'");
    std::string body = trimmed.substr(pos + 1, close - pos - 1);
    pos = close + 1;
    std::vector<int> cyc;
    bool spaced = body.find_first_of(" ,") != std::string::npos;
    if (spaced) {
      std::string tok;
      for (char ch : body + " ") {
        if (std::isdigit(static_cast<unsigned char>(ch))) {
          tok += ch;
        } else if (ch == ' ' || ch == ',') {
          if (!tok.empty()) cyc.push_back(std::stoi(tok));
          tok.clear();
        } else {
          throw ParseError(std::string("unexpected '") + ch + "' in permutation '" + text + "'");
        }
      }
    } else {
      for (char ch : body) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw ParseError(std::string("unexpected '") + ch + "' in permutation '" + text + "'");
        cyc.push_back(ch - '0');
      }
    }
    std::set<int> uniq(cyc.begin(), cyc.end());
    if (uniq.size() != cyc.size()) throw ParseError("cycle repeats a point in '" + text + "'");
    for (int v : cyc)
      if (v < 1 || v > n) throw ParseError("point " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    // Cycles compose right to left.
    Permutation c(n);
    for (std::size_t i = 0; i < cyc.size(); ++i) c.img_[static_cast<std::size_t>(cyc[i] - 1)] = cyc[(i + 1) % cyc.size()];
    p = p * c;
  }
  return p;
}

int Permutation::operator()(int i) const {
  if (i < 1 || i > size()) throw IndexOutOfRange("permutation point " + std::to_string(i));
  return img_[static_cast<std::size_t>(i - 1)];
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i + 1)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation q(size());
  for (std::size_t i = 0; i < img_.size(); ++i) q.img_[static_cast<std::size_t>(img_[i] - 1)] = static_cast<int>(i + 1);
  return q;
}

Permutation Permutation::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Permutation r(size()), b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

int Permutation::order() const {
  int o = 1;
  for (const auto& c : cycles()) o = std::lcm(o, static_cast<int>(c.size()));
  return o;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)] || img_[static_cast<std::size_t>(start - 1)] == start) continue;
    std::vector<int> c;
    for (int x = start; !seen[static_cast<std::size_t>(x - 1)]; x = img_[static_cast<std::size_t>(x - 1)]) {
      seen[static_cast<std::size_t>(x - 1)] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

namespace {
std::string render(const Permutation& p, bool spaced) {
  auto cs = p.cycles();
  if (cs.empty()) return "id";
  std::string out;
  for (const auto& c : cs) {
    out += "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0 && spaced) out += " ";
      out += std::to_string(c[i]);
    }
    out += ")";
  }
  return out;
}
}  // namespace

std::string Permutation::to_string() const { return render(*this, size() > 9); }
std::string Permutation::to_string_spaced() const { return render(*this, true); }

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw InvalidArgument("composing permutations of different sizes");
  Permutation r(a.size());
  for (int i = 1; i <= a.size(); ++i) r.img_[static_cast<std::size_t>(i - 1)] = a(b(i));
  return r;
}

const std::vector<Permutation>& s3_elements() {
  static const std::vector<Permutation> els = {
      Permutation::parse("id", 3),    Permutation::parse("(12)", 3),  Permutation::parse("(13)", 3),
      Permutation::parse("(23)", 3),  Permutation::parse("(123)", 3), Permutation::parse("(132)", 3)};
  return els;
}

std::string s3_label(const Permutation& p) {
  if (p.size() != 3) throw InvalidArgument("s3_label needs a permutation of {1,2,3}");
  return p.to_string();
}

}  // namespace coxforge
