#include "chevalley/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace chevalley {

CartanType parse_cartan_type(const std::string& token) {
  if (token.size() < 2 || !std::isalpha((unsigned char)token[0]))
    throw std::invalid_argument("malformed type token '" + token + "'");
  char fam = (char)std::toupper((unsigned char)token[0]);
  for (size_t i = 1; i < token.size(); ++i)
    if (!std::isdigit((unsigned char)token[i]))
      throw std::invalid_argument("malformed type token '" + token + "'");
  int rank = std::stoi(token.substr(1));
  CartanType kind{Family(fam), rank};
  bool ok = false;
  switch (kind.family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
    default: ok = false;
  }
  if (!ok) throw std::invalid_argument("unsupported type '" + token + "'");
  return kind;
}

std::vector<std::vector<int>> cartan_matrix(CartanType kind) {
  int n = kind.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto single = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (kind.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) single(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) single(i, i + 1);
      c[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) single(i, i + 1);
      c[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) single(i, i + 1);
      single(n - 3, n - 1);
      break;
    case Family::E:
      single(0, 2);
      single(2, 3);
      single(1, 3);
      for (int i = 3; i + 1 < n; ++i) single(i, i + 1);
      break;
    case Family::F:
      single(0, 1);
      single(2, 3);
      c[1][2] = -1;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      c[2][1] = -2;
      break;
    case Family::G:
      c[0][1] = -3;  // alpha_1 short
      c[1][0] = -1;
      break;
  }
  return c;
}

namespace {

std::vector<int> compute_symmetrizer(const std::vector<std::vector<int>>& c) {
  int n = (int)c.size();
  // Assign rational lengths along the (connected) diagram, then clear
  // denominators. Stored as num/den pairs to avoid pulling gmp in here.
  std::vector<long> num(n, 0), den(n, 1);
  std::vector<int> stack = {0};
  num[0] = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (i == j || c[i][j] == 0 || num[j] != 0) continue;
      // d_j / d_i = c[i][j] / c[j][i]
      num[j] = num[i] * c[i][j];
      den[j] = den[i] * c[j][i];
      if (num[j] < 0 && den[j] < 0) { num[j] = -num[j]; den[j] = -den[j]; }
      stack.push_back(j);
    }
  }
  long l = 1;
  for (int i = 0; i < n; ++i) l = std::lcm(l, den[i]);
  std::vector<int> d(n);
  long g = 0;
  for (int i = 0; i < n; ++i) {
    d[i] = (int)(num[i] * (l / den[i]));
    g = std::gcd(g, (long)d[i]);
  }
  for (int& x : d) x /= (int)g;
  return d;
}

}  // namespace

int RootSystem::index_of(const std::vector<int>& coeffs) const {
  auto it = index_.find(coeffs);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::pair_simple_coroot(const std::vector<int>& beta, int i) const {
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += beta[j] * cartan[i][j];
  return s;
}

std::vector<int> RootSystem::coroot_coeffs(const Root& beta) const {
  int n = rank();
  // (beta, beta) in the form with (alpha_i, alpha_i) = 2 d_i.
  long norm = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      norm += (long)beta.coeffs[i] * beta.coeffs[j] * symmetrizer[i] * cartan[i][j];
  long d_beta = norm / 2;
  std::vector<int> c(n);
  for (int j = 0; j < n; ++j) {
    long v = (long)beta.coeffs[j] * symmetrizer[j];
    if (v % d_beta != 0) throw std::logic_error("non-integral coroot");
    c[j] = (int)(v / d_beta);
  }
  return c;
}

RootSystem build_root_system(CartanType kind) {
  RootSystem sys;
  sys.kind = kind;
  sys.cartan = cartan_matrix(kind);
  sys.symmetrizer = compute_symmetrizer(sys.cartan);
  int n = kind.rank;

  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    known.insert(e);
    frontier.push_back(e);
  }
  // Height-by-height closure: beta + alpha_i is a root iff q = p - <beta,
  // alpha_i^vee> is positive, where p is the length of the down-string.
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < n; ++i) {
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += beta[j] * sys.cartan[i][j];
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        if (p - pairing <= 0) continue;
        std::vector<int> up = beta;
        up[i] += 1;
        if (known.insert(up).second) next.push_back(up);
      }
    }
    frontier = std::move(next);
  }

  for (const auto& v : known) sys.positive_roots.push_back(Root{v});
  std::sort(sys.positive_roots.begin(), sys.positive_roots.end());
  for (int i = 0; i < (int)sys.positive_roots.size(); ++i)
    sys.index_[sys.positive_roots[i].coeffs] = i;
  return sys;
}

std::string root_label(const Root& r) {
  std::string s;
  for (int c : r.coeffs) {
    if (c < 0 || c > 9) throw std::invalid_argument("coefficient out of label range");
    s += char('0' + c);
  }
  return s;
}

Root parse_root_label(const RootSystem& sys, const std::string& label) {
  if ((int)label.size() != sys.rank())
    throw std::invalid_argument("label '" + label + "' has wrong length for " +
                                sys.kind.name());
  std::vector<int> coeffs;
  for (char ch : label) {
    if (!std::isdigit((unsigned char)ch))
      throw std::invalid_argument("label '" + label + "' is not a digit string");
    coeffs.push_back(ch - '0');
  }
  if (sys.index_of(coeffs) < 0)
    throw std::invalid_argument("'" + label + "' is not a positive root of " +
                                sys.kind.name());
  return Root{coeffs};
}

}  // namespace chevalley
