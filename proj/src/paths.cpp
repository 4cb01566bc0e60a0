#include "tamari/paths.h"

#include <algorithm>
#include <cctype>

namespace tamari {

namespace {

struct WordParser {
  std::string_view s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError("bad path '" + std::string(s) + "': " + what);
  }
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  int exponent() {
    skip();
    if (pos >= s.size() || s[pos] != '^') return 1;
    ++pos;
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("missing exponent");
    return std::stoi(std::string(s.substr(start, pos - start)));
  }
  std::string sequence() {
    std::string out;
    for (;;) {
      skip();
      if (pos >= s.size() || s[pos] == ')') return out;
      std::string unit;
      char c = s[pos];
      if (c == 'N' || c == 'E') {
        unit = std::string(1, c);
        ++pos;
      } else if (c == '(') {
        ++pos;
        unit = sequence();
        if (pos >= s.size() || s[pos] != ')') fail("unbalanced parenthesis");
        ++pos;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      int e = exponent();
      if (e < 0 || unit.size() * static_cast<std::size_t>(e) > 100000) fail("too long");
      for (int k = 0; k < e; ++k) out += unit;
    }
  }
};

}  // namespace

LatticePath LatticePath::parse(std::string_view text) {
  WordParser wp{text};
  auto w = wp.sequence();
  if (wp.pos != text.size()) wp.fail("unbalanced parenthesis");
  LatticePath p;
  p.word_ = std::move(w);
  return p;
}

LatticePath LatticePath::from_word(std::string word) {
  for (char c : word)
    if (c != 'N' && c != 'E') throw ValidationError("path letters must be N or E");
  LatticePath p;
  p.word_ = std::move(word);
  return p;
}

int LatticePath::east() const { return static_cast<int>(std::count(word_.begin(), word_.end(), 'E')); }
int LatticePath::north() const { return static_cast<int>(std::count(word_.begin(), word_.end(), 'N')); }

std::pair<int, int> LatticePath::point(std::size_t k) const {
  int x = 0, y = 0;
  for (std::size_t t = 0; t < k; ++t) (word_[t] == 'E' ? x : y)++;
  return {x, y};
}

LatticePath LatticePath::transpose() const {
  std::string w(word_.rbegin(), word_.rend());
  for (char& c : w) c = c == 'N' ? 'E' : 'N';
  return from_word(std::move(w));
}

LatticePath nu_of_pair(const IndexPair& p) {
  auto m = p.merged();
  std::string w;
  for (std::size_t k = 1; k + 1 < m.size(); ++k) w += m[k].side == Side::I ? 'E' : 'N';
  return LatticePath::from_word(std::move(w));
}

IndexPair pair_of_nu(const LatticePath& nu) {
  std::vector<int> I{0}, J;
  for (std::size_t k = 0; k < nu.length(); ++k) (nu[k] == 'E' ? I : J).push_back(static_cast<int>(k + 1));
  J.push_back(static_cast<int>(nu.length() + 1));
  return IndexPair::make(I, J, Mode::A);
}

bool is_path_above(const LatticePath& mu, const LatticePath& nu) {
  if (mu.length() != nu.length() || mu.north() != nu.north()) return false;
  int a = 0, b = 0;
  for (std::size_t k = 0; k < mu.length(); ++k) {
    a += mu[k] == 'N';
    b += nu[k] == 'N';
    if (a < b) return false;
  }
  return true;
}

std::vector<LatticePath> enumerate_paths_above(const LatticePath& nu, std::size_t max_count) {
  const int L = static_cast<int>(nu.length()), total_n = nu.north();
  std::vector<int> need(L + 1, 0);
  for (int k = 0; k < L; ++k) need[k + 1] = need[k] + (nu[k] == 'N');
  std::vector<LatticePath> out;
  std::string w;
  auto rec = [&](auto&& self, int n_used) -> void {
    int k = static_cast<int>(w.size());
    if (k == L) {
      if (out.size() >= max_count) throw std::length_error("path enumeration exceeds the size limit");
      out.push_back(LatticePath::from_word(w));
      return;
    }
    int e_used = k - n_used;
    if (e_used < L - total_n && n_used >= need[k + 1]) {
      w.push_back('E');
      self(self, n_used);
      w.pop_back();
    }
    if (n_used < total_n) {
      w.push_back('N');
      self(self, n_used + 1);
      w.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<int> rightmost_x(const LatticePath& nu) {
  std::vector<int> r(nu.north() + 1, 0);
  int x = 0, y = 0;
  for (std::size_t k = 0; k < nu.length(); ++k) {
    if (nu[k] == 'E') ++x; else ++y;
    r[y] = x;
  }
  return r;
}

int horiz(const LatticePath& mu, std::size_t k, const LatticePath& nu) {
  auto r = rightmost_x(nu);
  auto [x, y] = mu.point(k);
  return r[y] - x;
}

std::vector<std::size_t> valley_points(const LatticePath& mu) {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k < mu.length(); ++k)
    if (mu[k - 1] == 'E' && mu[k] == 'N') out.push_back(k);
  return out;
}

int valley_count(const LatticePath& mu) { return static_cast<int>(valley_points(mu).size()); }

std::vector<PathCover> covers_of(const LatticePath& mu, const LatticePath& nu) {
  auto r = rightmost_x(nu);
  const auto& w = mu.word();
  std::vector<int> hz(w.size() + 1);
  int x = 0, y = 0;
  hz[0] = r[0];
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == 'E') ++x; else ++y;
    hz[k + 1] = r[y] - x;
  }
  std::vector<PathCover> out;
  for (auto p : valley_points(mu)) {
    std::size_t q = p + 1;
    while (q <= w.size() && hz[q] != hz[p]) ++q;
    if (q > w.size()) throw std::logic_error("covers_of: no matching point");
    std::string nw = w.substr(0, p - 1) + w.substr(p, q - p) + "E" + w.substr(q);
    out.push_back({p, q, LatticePath::from_word(std::move(nw))});
  }
  return out;
}

namespace {

std::vector<std::vector<int>> neighbours_of_j(const Tree& t, const IndexPair& p) {
  std::vector<std::vector<int>> nb(p.J().size());
  for (const auto& a : t) nb[p.pos_j(a.j)].push_back(a.i);
  return nb;
}

}  // namespace

LatticePath rho(const Tree& t, const IndexPair& p) {
  auto nb = neighbours_of_j(t, p);
  std::string w;
  for (const auto& v : nb) {
    if (v.empty()) throw ValidationError("rho: J-node without arcs");
    w.append(v.size() - 1, 'E');
    w.push_back('N');
  }
  w.pop_back();
  return LatticePath::from_word(std::move(w));
}

RhoMatch rho_with_points(const Tree& t, const IndexPair& p) {
  RhoMatch m{rho(t, p), {}};
  auto nb = neighbours_of_j(t, p);
  std::size_t point = 0;
  for (std::size_t k = 0; k < nb.size(); ++k) {
    auto v = nb[k];
    std::sort(v.rbegin(), v.rend());
    for (std::size_t l = 0; l < v.size(); ++l) m.point_arc.push_back({point + l, Arc{v[l], p.J()[k]}});
    point += v.size();
  }
  return m;
}

Tree rho_inv(const LatticePath& mu, const IndexPair& p) {
  if (mu.north() + 1 != (int)p.J().size() || mu.east() + 1 != (int)p.I().size())
    throw ValidationError("rho_inv: path does not fit the pair");
  std::vector<int> count(p.J().size(), 0);
  {
    int y = 0;
    count[0] = 1;
    for (char c : mu.word()) {
      if (c == 'N') ++y;
      ++count[y];
    }
  }
  std::vector<Arc> arcs;
  for (std::size_t k = 0; k < p.J().size(); ++k) {
    int j = p.J()[k];
    int need = count[k];
    for (auto it = p.I().rbegin(); it != p.I().rend() && need > 0; ++it) {
      int i = *it;
      if (i > j) continue;
      bool ok = std::none_of(arcs.begin(), arcs.end(), [&](const Arc& a) { return a.i < i && i <= a.j; });
      if (!ok) continue;
      arcs.push_back({i, j});
      --need;
    }
    if (need > 0) throw ValidationError("rho_inv: path lies below nu");
  }
  return Tree(std::move(arcs));
}

}  // namespace tamari
