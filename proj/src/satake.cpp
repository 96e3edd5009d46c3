#include "satake/satake.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>

#include "satake/epsilon.hpp"

namespace satake {

NodeSet SatakeDiagram::white() const {
  NodeSet w;
  for (int i = 0; i < rank(); ++i)
    if (!is_black(i)) w.insert(i);
  return w;
}

std::vector<std::pair<int, int>> SatakeDiagram::arrows() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < static_cast<int>(omega.size()); ++i) {
    const int j = omega[static_cast<std::size_t>(i)];
    if (j > i) out.emplace_back(i, j);
  }
  return out;
}

bool operator==(const SatakeDiagram& a, const SatakeDiagram& b) {
  return a.rs->components() == b.rs->components() && a.black == b.black && a.omega == b.omega;
}

std::shared_ptr<const RootSystem> shared_root_system(const std::vector<SimpleType>& types) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const RootSystem>> cache;
  std::string key;
  for (const auto& t : types) key += t.label() + "x";
  std::lock_guard lock(mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto rs = std::make_shared<const RootSystem>(types);
  cache.emplace(key, rs);
  return rs;
}

SatakeDiagram make_diagram(std::shared_ptr<const RootSystem> rs, const NodeSet& black,
                           const std::vector<std::pair<int, int>>& arrows) {
  SatakeDiagram d;
  d.rs = std::move(rs);
  for (int i : black) d.rs->check_node(i);
  d.black = black;
  d.omega.assign(static_cast<std::size_t>(d.rank()), -1);
  for (int i = 0; i < d.rank(); ++i)
    if (!d.is_black(i)) d.omega[static_cast<std::size_t>(i)] = i;
  for (auto [i, j] : arrows) {
    d.rs->check_node(i);
    d.rs->check_node(j);
    d.omega[static_cast<std::size_t>(i)] = j;
    d.omega[static_cast<std::size_t>(j)] = i;
  }
  return d;
}

// ---------------------------------------------------------------- validate

bool ValidationReport::has(std::string_view check) const {
  return std::any_of(failures.begin(), failures.end(), [&](const auto& f) { return f.check == check; });
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::string s;
  for (const auto& f : failures) s += (s.empty() ? "" : "; ") + f.check + ": " + f.detail;
  return s;
}

namespace {

std::string node_name(int i) { return "alpha_" + std::to_string(i + 1); }

// Partition and omega checks. Later checks need all of these to hold.
void check_structure(const SatakeDiagram& d, ValidationReport& r) {
  const int n = d.rank();
  if (static_cast<int>(d.omega.size()) != n) {
    r.failures.push_back({"partition", "omega has " + std::to_string(d.omega.size()) + " entries for " +
                                           std::to_string(n) + " nodes"});
    return;
  }
  for (int i : d.black)
    if (i < 0 || i >= n) r.failures.push_back({"partition", "black node index out of range"});
  if (!r.ok()) return;

  for (int i = 0; i < n; ++i) {
    const int j = d.omega[static_cast<std::size_t>(i)];
    if (d.is_black(i)) {
      if (j != -1) r.failures.push_back({"arrow-touches-black", "arrow touches black node " + node_name(i)});
      continue;
    }
    if (j < 0 || j >= n) {
      r.failures.push_back({"omega-domain", "omega undefined on white node " + node_name(i)});
    } else if (d.is_black(j)) {
      r.failures.push_back({"arrow-touches-black", "arrow touches black node " + node_name(j)});
    }
  }
  if (!r.ok()) return;

  for (int i : d.white()) {
    const int j = d.omega[static_cast<std::size_t>(i)];
    if (d.omega[static_cast<std::size_t>(j)] != i)
      r.failures.push_back({"omega-involution", "omega(omega(" + node_name(i) + ")) != " + node_name(i)});
  }
  if (!r.ok()) return;

  for (int i : d.white())
    for (int j : d.white()) {
      const int oi = d.omega[static_cast<std::size_t>(i)];
      const int oj = d.omega[static_cast<std::size_t>(j)];
      if (d.rs->cartan(oi, oj) != d.rs->cartan(i, j))
        r.failures.push_back({"omega-cartan", "omega does not preserve the Cartan entry between " +
                                                  node_name(i) + " and " + node_name(j)});
    }
}

}  // namespace

namespace {

// An admissible colouring is a Satake diagram only if every white root fixed
// by omega pairs evenly with 2 rho^vee of the black subsystem. Without this,
// e.g. "A3 black=2 arrows=" or "F4 black=2,3,4 arrows=" would pass.
void check_white_parity(const SatakeDiagram& d, ValidationReport& r) {
  const RootSystem& rs = *d.rs;
  for (int a : d.white()) {
    if (d.omega[static_cast<std::size_t>(a)] != a) continue;
    long long pairing = 0;
    for (const RootVector& b : rs.positive_roots())
      if (supported_on(b, d.black)) pairing += 2 * rs.inner(rs.simple_root(a), b) / rs.inner(b, b);
    if (pairing % 2 != 0)
      r.failures.push_back({"white-parity", "fixed white node " + node_name(a) + " pairs to " +
                                                std::to_string(pairing) + " with 2 rho^vee of the black part"});
  }
}

}  // namespace

ValidationReport validate(const SatakeDiagram& d) {
  ValidationReport r;
  if (!d.rs) {
    r.failures.push_back({"partition", "diagram has no root system"});
    return r;
  }
  check_structure(d, r);
  if (!r.ok()) return r;

  const RootSystem& rs = *d.rs;
  const int n = d.rank();

  const NodePermutation eps = detail::epsilon_unchecked(d);
  if (!is_diagram_automorphism(rs, eps))
    r.failures.push_back({"epsilon-automorphism", "eps = " + describe_permutation(eps) +
                                                      " is not an automorphism of the Dynkin diagram"});
  if (!eps.is_involution())
    r.failures.push_back({"epsilon-involution", "eps is not involutive"});

  const IntMatrix theta = detail::theta_unchecked(d);
  if (!(theta * theta == IntMatrix::identity(n)))
    r.failures.push_back({"theta-involution", "theta^T squared is not the identity"});
  for (int i : d.black)
    if (!(theta.column(i) == rs.simple_root(i)))
      r.failures.push_back({"theta-fixes-black", "theta^T moves black root " + node_name(i)});

  for (const RootVector& g : rs.positive_roots()) {
    const RootVector t = theta.apply(g);
    if (!rs.is_root(t)) {
      r.failures.push_back({"theta-roots", "theta^T" + to_string(g) + " = " + to_string(t) + " is not a root"});
      continue;
    }
    if (supported_on(g, d.black)) continue;
    if (!rs.is_positive_root(-t))
      r.failures.push_back({"theta-noncompact-sign",
                            "theta^T sends noncompact positive root " + to_string(g) + " to " + to_string(t)});
  }

  for (int a : d.white()) {
    RootVector rest = -(theta.column(a) + rs.simple_root(d.omega[static_cast<std::size_t>(a)]));
    for (int g = 0; g < n; ++g) {
      const int c = rest[static_cast<std::size_t>(g)];
      if (c == 0) continue;
      if (!d.is_black(g)) {
        r.failures.push_back({"c-coefficients", "theta^T(" + node_name(a) + ") has a stray white component on " +
                                                    node_name(g)});
      } else if (c < 0) {
        r.failures.push_back({"c-coefficients", "c(" + node_name(a) + ", " + node_name(g) +
                                                    ") = " + std::to_string(c) + " is negative"});
      }
    }
  }
  if (r.ok()) check_white_parity(d, r);
  return r;
}

void require_valid(const SatakeDiagram& d) {
  const ValidationReport r = validate(d);
  if (!r.ok()) throw DiagramError("invalid Satake diagram " + format_diagram(d) + ": " + r.summary());
}

// ------------------------------------------------------------------ lookup

std::string normalize_name(std::string_view name) {
  std::string out;
  for (char c : name)
    if (!std::isspace(static_cast<unsigned char>(c))) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

const RealFormRecord* find_record(std::span<const RealFormRecord> records, std::string_view name) {
  const std::string key = normalize_name(name);
  for (const auto& rec : records)
    for (const auto& n : rec.names)
      if (normalize_name(n) == key) return &rec;
  return nullptr;
}

namespace {

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

}  // namespace

std::vector<std::string> nearest_names(std::span<const RealFormRecord> records, std::string_view name,
                                       std::size_t limit) {
  const std::string key = normalize_name(name);
  std::vector<std::pair<std::size_t, std::string>> scored;
  for (const auto& rec : records)
    for (const auto& n : rec.names) scored.emplace_back(edit_distance(key, normalize_name(n)), n);
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::string> out;
  for (std::size_t k = 0; k < scored.size() && out.size() < limit; ++k) out.push_back(scored[k].second);
  return out;
}

// ------------------------------------------------------------- text format

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  void skip_spaces() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_space_or_end() const { return done() || std::isspace(static_cast<unsigned char>(peek())); }

  void expect(std::string_view lit) {
    if (s_.substr(pos_, lit.size()) != lit) throw ParseError("expected '" + std::string(lit) + "'", pos_);
    pos_ += lit.size();
  }

  int number() {
    const std::size_t start = pos_;
    int v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 100000) throw ParseError("number too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a number", start);
    return v;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::vector<SimpleType> parse_types(Cursor& cur) {
  std::vector<SimpleType> types;
  for (;;) {
    const std::size_t start = cur.pos();
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(cur.peek())));
    if (c < 'A' || c > 'G') throw ParseError("unknown type '" + std::string(1, cur.peek()) + "'", start);
    cur.expect(std::string(1, cur.peek()));
    SimpleType t{static_cast<Family>(c), cur.number()};
    try {
      check_simple_type(t);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), start);
    }
    types.push_back(t);
    if (cur.peek() != 'x') break;
    cur.expect("x");
  }
  return types;
}

int parse_node(Cursor& cur, int n) {
  const std::size_t start = cur.pos();
  const int v = cur.number();
  if (v < 1 || v > n) throw ParseError("node index " + std::to_string(v) + " out of range 1.." + std::to_string(n), start);
  return v - 1;
}

}  // namespace

SatakeDiagram parse_diagram(std::string_view text) {
  Cursor cur(text);
  cur.skip_spaces();
  const std::size_t type_pos = cur.pos();
  const std::vector<SimpleType> types = parse_types(cur);
  if (!cur.at_space_or_end()) throw ParseError("unexpected character after type", cur.pos());
  std::shared_ptr<const RootSystem> rs;
  try {
    rs = shared_root_system(types);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), type_pos);
  }
  const int n = rs->rank();

  cur.skip_spaces();
  cur.expect("black=");
  NodeSet black;
  while (!cur.at_space_or_end()) {
    black.insert(parse_node(cur, n));
    if (cur.peek() == ',') cur.expect(",");
    else if (!cur.at_space_or_end()) throw ParseError("expected ',' in black list", cur.pos());
  }

  cur.skip_spaces();
  cur.expect("arrows=");
  std::vector<std::pair<int, int>> arrows;
  while (!cur.at_space_or_end()) {
    const int i = parse_node(cur, n);
    cur.expect(":");
    const int j = parse_node(cur, n);
    if (i != j) arrows.emplace_back(i, j);
    if (cur.peek() == ',') cur.expect(",");
    else if (!cur.at_space_or_end()) throw ParseError("expected ',' in arrow list", cur.pos());
  }
  cur.skip_spaces();
  if (!cur.done()) throw ParseError("trailing characters", cur.pos());
  return make_diagram(std::move(rs), black, arrows);
}

std::string format_diagram(const SatakeDiagram& d) {
  std::string s = d.rs->label() + " black=";
  bool first = true;
  for (int i : d.black) {
    s += (first ? "" : ",") + std::to_string(i + 1);
    first = false;
  }
  s += " arrows=";
  first = true;
  for (auto [i, j] : d.arrows()) {
    s += (first ? "" : ",") + std::to_string(i + 1) + ":" + std::to_string(j + 1);
    first = false;
  }
  return s;
}

// ---------------------------------------------------------------- drawing

namespace {

// Placeholder bytes replaced once the layout is fixed.
constexpr char kBlack = '\x01';
constexpr char kWhite = '\x02';
constexpr char kTriple = '\x03';

std::string bond(const RootSystem& rs, int u, int v) {
  const int m = rs.cartan(u, v) * rs.cartan(v, u);
  if (m == 1) return "---";
  const bool u_long = rs.symmetrizer()[static_cast<std::size_t>(u)] > rs.symmetrizer()[static_cast<std::size_t>(v)];
  if (m == 2) return u_long ? "==>" : "<==";
  return u_long ? std::string{kTriple, kTriple, '>'} : std::string{'<', kTriple, kTriple};
}

void put(std::string& line, std::size_t col, const std::string& s) {
  if (line.size() < col + s.size()) line.resize(col + s.size(), ' ');
  line.replace(col, s.size(), s);
}

std::vector<std::string> draw_component(const SatakeDiagram& d, int comp) {
  const RootSystem& rs = *d.rs;
  const SimpleType t = rs.components()[static_cast<std::size_t>(comp)];
  const int off = rs.component_offset(comp);
  std::vector<int> spine;
  int branch = -1, attach = -1;
  switch (t.family) {
    case Family::D:
      for (int k = 0; k < t.rank - 1; ++k) spine.push_back(off + k);
      branch = off + t.rank - 1;
      attach = t.rank - 3;
      break;
    case Family::E:
      spine.push_back(off);
      for (int k = 2; k < t.rank; ++k) spine.push_back(off + k);
      branch = off + 1;
      attach = 2;
      break;
    default:
      for (int k = 0; k < t.rank; ++k) spine.push_back(off + k);
  }
  auto glyph = [&](int node) { return std::string(1, d.is_black(node) ? kBlack : kWhite); };

  std::string nodes, labels;
  for (std::size_t k = 0; k < spine.size(); ++k) {
    put(nodes, 4 * k, glyph(spine[k]));
    if (k + 1 < spine.size()) put(nodes, 4 * k + 1, bond(rs, spine[k], spine[k + 1]));
    put(labels, 4 * k, std::to_string(spine[k] + 1));
  }
  std::vector<std::string> lines{nodes, labels};
  if (branch >= 0) {
    const std::size_t col = 4 * static_cast<std::size_t>(attach);
    std::string bar, node, label;
    put(bar, col, "|");
    put(node, col, glyph(branch));
    put(label, col, std::to_string(branch + 1));
    // The label line already sits under the spine; the bar goes beneath it.
    lines.push_back(bar);
    lines.push_back(node);
    lines.push_back(label);
  }
  return lines;
}

}  // namespace

std::string render_diagram(const SatakeDiagram& d, bool color) {
  std::ostringstream os;
  os << d.rs->label() << '\n';
  for (int c = 0; c < static_cast<int>(d.rs->components().size()); ++c) {
    if (c > 0) os << '\n';
    for (const std::string& line : draw_component(d, c)) {
      std::string out;
      for (char ch : line) {
        if (ch == kBlack) out += color ? "\x1b[1m•\x1b[0m" : "•";
        else if (ch == kWhite) out += "○";
        else if (ch == kTriple) out += "≡";
        else out += ch;
      }
      while (!out.empty() && out.back() == ' ') out.pop_back();
      os << out << '\n';
    }
  }
  os << "arrows: ";
  const auto arrows = d.arrows();
  if (arrows.empty()) os << "none";
  for (std::size_t k = 0; k < arrows.size(); ++k)
    os << (k ? ", " : "") << arrows[k].first + 1 << "<->" << arrows[k].second + 1;
  os << '\n';
  return os.str();
}

}  // namespace satake
