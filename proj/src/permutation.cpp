#include "flockgraph/permutation.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "flockgraph/errors.hpp"

namespace flockgraph {

namespace {

void check_degree(unsigned n) {
  if (n < 1 || n > kMaxDegree)
    throw std::invalid_argument("permutation degree must be in 1.." +
                                std::to_string(kMaxDegree) + ", got " +
                                std::to_string(n));
}

}  // namespace

Permutation Permutation::identity(unsigned degree) {
  check_degree(degree);
  std::vector<unsigned> img(degree + 1);
  for (unsigned x = 0; x <= degree; ++x) img[x] = x;
  return Permutation(std::move(img), raw_tag{});
}

Permutation Permutation::from_image(const std::vector<unsigned>& image) {
  check_degree(static_cast<unsigned>(image.size()));
  const unsigned n = static_cast<unsigned>(image.size());
  std::vector<unsigned> img(n + 1, 0);
  std::vector<bool> seen(n + 1, false);
  for (unsigned i = 0; i < n; ++i) {
    unsigned v = image[i];
    if (v < 1 || v > n)
      throw std::invalid_argument("image value " + std::to_string(v) +
                                  " out of range 1.." + std::to_string(n));
    if (seen[v])
      throw std::invalid_argument("image value " + std::to_string(v) + " repeated");
    seen[v] = true;
    img[i + 1] = v;
  }
  return Permutation(std::move(img), raw_tag{});
}

Permutation Permutation::from_cycles(unsigned degree,
                                     const std::vector<std::vector<unsigned>>& cycles) {
  check_degree(degree);
  std::vector<unsigned> img(degree + 1);
  for (unsigned x = 0; x <= degree; ++x) img[x] = x;
  std::vector<bool> seen(degree + 1, false);
  for (const auto& cycle : cycles) {
    if (cycle.empty()) throw std::invalid_argument("empty cycle");
    for (unsigned v : cycle) {
      if (v < 1 || v > degree)
        throw std::invalid_argument("cycle element " + std::to_string(v) +
                                    " out of range 1.." + std::to_string(degree));
      if (seen[v])
        throw std::invalid_argument("cycle element " + std::to_string(v) + " repeated");
      seen[v] = true;
    }
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) img[cycle[i]] = cycle[i + 1];
    img[cycle.back()] = cycle.front();
  }
  return Permutation(std::move(img), raw_tag{});
}

Permutation Permutation::inverse() const {
  std::vector<unsigned> img(img_.size(), 0);
  for (unsigned x = 1; x <= degree(); ++x) img[img_[x]] = x;
  return Permutation(std::move(img), raw_tag{});
}

bool Permutation::is_identity() const {
  for (unsigned x = 1; x <= degree(); ++x)
    if (img_[x] != x) return false;
  return true;
}

Permutation operator*(const Permutation& phi, const Permutation& psi) {
  if (phi.degree() != psi.degree())
    throw std::invalid_argument("composing permutations of different degrees");
  const unsigned n = phi.degree();
  std::vector<unsigned> img(n + 1, 0);
  for (unsigned x = 1; x <= n; ++x) img[x] = phi.img_[psi.img_[x]];
  return Permutation(std::move(img), Permutation::raw_tag{});
}

Permutation conjugate(const Permutation& rho, const Permutation& phi) {
  if (rho.degree() != phi.degree())
    throw std::invalid_argument("conjugating permutations of different degrees");
  const unsigned n = rho.degree();
  // (rho phi rho^-1)(rho(x)) = rho(phi(x))
  std::vector<unsigned> img(n + 1, 0);
  for (unsigned x = 1; x <= n; ++x) img[rho.img_[x]] = rho.img_[phi.img_[x]];
  return Permutation(std::move(img), Permutation::raw_tag{});
}

CycleDecomposition decompose(const Permutation& phi) {
  const unsigned n = phi.degree();
  CycleDecomposition out;
  std::vector<bool> seen(n + 1, false);
  for (unsigned start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<unsigned> cycle;
    unsigned x = start;
    do {
      seen[x] = true;
      cycle.push_back(x);
      x = phi(x);
    } while (x != start);
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

namespace {

Permutation parse_dotted(std::string_view text, unsigned degree) {
  if (degree > 9)
    throw ParseError("dotted cycle form is only defined for degree <= 9; "
                     "use the grouped form \"(1 2 3)(4 5)\"");
  // grammar: '(' (digit+ '.')+ ')'
  if (text.size() < 4 || text.front() != '(' || text.back() != ')')
    throw ParseError("dotted form must look like \"(123.45.6.)\"");
  std::vector<std::vector<unsigned>> cycles;
  std::vector<unsigned> cycle;
  for (std::size_t i = 1; i + 1 < text.size(); ++i) {
    char c = text[i];
    if (c >= '1' && c <= '9') {
      cycle.push_back(static_cast<unsigned>(c - '0'));
    } else if (c == '.') {
      if (cycle.empty()) throw ParseError("empty cycle before '.'");
      cycles.push_back(std::move(cycle));
      cycle.clear();
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in dotted form");
    }
  }
  if (!cycle.empty()) throw ParseError("cycle not terminated by '.'");
  if (cycles.empty()) throw ParseError("no cycles in input");
  return Permutation::from_cycles(degree, cycles);
}

Permutation parse_grouped(std::string_view text, unsigned degree) {
  std::vector<std::vector<unsigned>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError(std::string("expected '(' at position ") + std::to_string(i));
    ++i;
    std::vector<unsigned> cycle;
    while (true) {
      while (i < text.size() && text[i] == ' ') ++i;
      if (i >= text.size()) throw ParseError("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError(std::string("unexpected character '") + text[i] + "'");
      unsigned v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned>(text[i] - '0');
        if (v > kMaxDegree) throw ParseError("element " + std::to_string(v) + " too large");
        ++i;
      }
      cycle.push_back(v);
    }
    if (cycle.empty()) throw ParseError("empty cycle \"()\"");
    cycles.push_back(std::move(cycle));
  }
  if (cycles.empty()) throw ParseError("no cycles in input");
  return Permutation::from_cycles(degree, cycles);
}

}  // namespace

Permutation parse(std::string_view text, unsigned degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw ParseError("degree must be in 1.." + std::to_string(kMaxDegree));
  if (text.empty()) throw ParseError("empty permutation text");
  try {
    if (text.find('.') != std::string_view::npos) return parse_dotted(text, degree);
    return parse_grouped(text, degree);
  } catch (const std::invalid_argument& e) {
    // from_cycles rejections (range / repeats) are input errors here
    throw ParseError(e.what());
  }
}

std::string format(const Permutation& phi) {
  const auto dec = decompose(phi);
  std::ostringstream os;
  if (phi.degree() <= 9) {
    os << '(';
    for (const auto& cycle : dec.cycles) {
      for (unsigned v : cycle) os << v;
      os << '.';
    }
    os << ')';
  } else {
    for (const auto& cycle : dec.cycles) {
      os << '(';
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) os << ' ';
        os << cycle[i];
      }
      os << ')';
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& phi) {
  return os << format(phi);
}

}  // namespace flockgraph
