#include "tamari/index_pair.h"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace tamari {

std::string mode_name(Mode m) { return m == Mode::A ? "A" : "B"; }

Mode parse_mode(std::string_view s) {
  if (s == "A" || s == "a") return Mode::A;
  if (s == "B" || s == "b") return Mode::B;
  throw ValidationError("unknown mode '" + std::string(s) + "' (expected A or B)");
}

namespace {

void sort_unique(std::vector<int>& v, const char* name) {
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    throw ValidationError(std::string("repeated value in ") + name);
}

std::vector<int> parse_list(std::string_view s) {
  std::vector<int> out;
  while (!s.empty()) {
    auto comma = s.find(',');
    auto tok = s.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw ValidationError("bad index '" + std::string(tok) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

IndexPair IndexPair::make(std::vector<int> I, std::vector<int> J, Mode mode,
                          std::optional<int> n) {
  if (I.empty() || J.empty()) throw ValidationError("I and J must be nonempty");
  sort_unique(I, "I");
  sort_unique(J, "J");
  if (I.front() < 0 || J.front() < 0) throw ValidationError("negative index");
  int mx = std::max(I.back(), J.back());
  IndexPair p;
  p.mode_ = mode;
  if (mode == Mode::A) {
    if (n && *n != mx) throw ValidationError("mode A: n must equal max(I u J)");
    if (!(I.front() <= J.front())) throw ValidationError("mode A: min(I u J) must lie in I");
    if (!(J.back() >= I.back())) throw ValidationError("mode A: max(I u J) must lie in J");
    p.n_ = mx;
  } else {
    p.n_ = n.value_or(mx);
    if (p.n_ < mx) throw ValidationError("mode B: index exceeds n");
  }
  p.I_ = std::move(I);
  p.J_ = std::move(J);
  p.pos_i_.assign(p.n_ + 1, -1);
  p.pos_j_.assign(p.n_ + 1, -1);
  for (int k = 0; k < (int)p.I_.size(); ++k) p.pos_i_[p.I_[k]] = k;
  for (int k = 0; k < (int)p.J_.size(); ++k) p.pos_j_[p.J_[k]] = k;
  return p;
}

IndexPair IndexPair::parse(std::string_view text, Mode mode, std::optional<int> n) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos) throw ValidationError("pair must look like I=..;J=..");
  auto a = text.substr(0, semi), b = text.substr(semi + 1);
  auto strip = [](std::string_view s, char c) {
    auto skip = [&] {
      while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    };
    skip();
    if (s.empty() || (s[0] != c && s[0] != c + 32)) throw ValidationError("pair must look like I=..;J=..");
    s.remove_prefix(1);
    skip();
    if (s.empty() || s[0] != '=') throw ValidationError("pair must look like I=..;J=..");
    return s.substr(1);
  };
  return make(parse_list(strip(a, 'I')), parse_list(strip(b, 'J')), mode, n);
}

std::vector<Node> IndexPair::merged() const {
  std::vector<Node> out;
  out.reserve(size());
  for (int v : I_) out.push_back({v, Side::I});
  for (int v : J_) out.push_back({v, Side::J});
  std::sort(out.begin(), out.end());
  return out;
}

IndexPair IndexPair::with_mode(Mode m, std::optional<int> n) const {
  return make(I_, J_, m, n ? n : (m == Mode::B ? std::optional<int>(n_) : std::nullopt));
}

std::string IndexPair::str() const {
  std::ostringstream os;
  os << "I=";
  for (size_t k = 0; k < I_.size(); ++k) os << (k ? "," : "") << I_[k];
  os << ";J=";
  for (size_t k = 0; k < J_.size(); ++k) os << (k ? "," : "") << J_[k];
  return os.str();
}

IndexPair normalize(std::vector<int> I, std::vector<int> J) {
  if (I.empty() || J.empty()) throw ValidationError("I and J must be nonempty");
  int lo = *std::min_element(I.begin(), I.end());
  int hi = *std::max_element(J.begin(), J.end());
  std::erase_if(I, [&](int v) { return v > hi; });
  std::erase_if(J, [&](int v) { return v < lo; });
  if (I.empty() || J.empty()) throw ValidationError("normalization leaves an empty set");
  return IndexPair::make(std::move(I), std::move(J), Mode::A);
}

IndexPair normalize(const IndexPair& p) { return normalize(p.I(), p.J()); }

IndexPair reverse_pair(const IndexPair& p) {
  int c = p.mode() == Mode::B ? p.n() : std::min(p.I().front(), p.J().front()) + p.n();
  std::vector<int> I, J;
  for (int v : p.J()) I.push_back(c - v);
  for (int v : p.I()) J.push_back(c - v);
  return IndexPair::make(I, J, p.mode(),
                         p.mode() == Mode::B ? std::optional<int>(p.n()) : std::nullopt);
}

}  // namespace tamari
