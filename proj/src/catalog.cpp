// Satake diagrams of the real forms of simple Lie algebras, after the
// standard classification tables. Classical families
// are entered as the tables give them, one black/arrow pattern per family
// depending only on the parameters; exceptional forms are literal.

#include <sstream>

#include "satake/satake.hpp"

namespace satake {

namespace {

std::string csv_range(int from, int to, int step = 1) {
  std::string s;
  for (int i = from; i <= to; i += step) s += (s.empty() ? "" : ",") + std::to_string(i);
  return s;
}

std::string join_csv(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "," + b;
}

std::string pq(const std::string& head, int p, int q) {
  return head + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

class CatalogBuilder {
 public:
  explicit CatalogBuilder(int bound) : bound_(bound) {}

  bool within(int rank) const { return rank <= bound_; }

  void add(std::vector<std::string> names, const std::string& diagram, std::string notes = {}) {
    out_.push_back({std::move(names), parse_diagram(diagram), std::move(notes)});
  }

  std::vector<RealFormRecord> take() { return std::move(out_); }

 private:
  int bound_;
  std::vector<RealFormRecord> out_;
};

void add_type_a(CatalogBuilder& cat, int l) {
  const std::string t = "A" + std::to_string(l) + " ";
  const int n = l + 1;
  const std::string sn = std::to_string(n);

  std::vector<std::string> split{"sl(" + sn + ",R)"};
  if (l == 1) split.push_back("su(1,1)");
  if (l == 3) split.push_back("so(3,3)");
  cat.add(split, t + "black= arrows=", "split; AI");

  // su*(2m) = sl(m,H): odd nodes black.
  if (l % 2 == 1 && l >= 3) {
    const int m = (l + 1) / 2;
    std::vector<std::string> names{"su*(" + sn + ")", "sl(" + std::to_string(m) + ",H)"};
    if (l == 3) names.push_back("so(1,5)");
    cat.add(names, t + "black=" + csv_range(1, l, 2) + " arrows=", "AII");
  }

  // su(p,q), p >= q >= 1: nodes q+1..p-1 black, i <-> l+1-i for i <= q.
  for (int q = 1; 2 * q <= n; ++q) {
    const int p = n - q;
    if (l == 1) break;  // su(1,1) is the split form
    std::string arrows;
    for (int i = 1; i <= q; ++i)
      if (i != l + 1 - i) arrows = join_csv(arrows, std::to_string(i) + ":" + std::to_string(l + 1 - i));
    std::vector<std::string> names{pq("su", p, q)};
    if (l == 3 && q == 2) names.push_back("so(2,4)");
    if (l == 3 && q == 1) names.push_back("so*(6)");
    cat.add(names, t + "black=" + csv_range(q + 1, p - 1) + " arrows=" + arrows, q == 1 ? "AIV" : "AIII");
  }

  std::vector<std::string> compact{"su(" + sn + ")"};
  if (l == 1) {
    compact.push_back("su*(2)");
    compact.push_back("sl(1,H)");
  }
  if (l == 3) compact.push_back("so(6)");
  cat.add(compact, t + "black=" + csv_range(1, l) + " arrows=", "compact");
}

// so(p,q), p + q = 2l + 1, p <= q: nodes 1..p white, the rest black.
void add_type_b(CatalogBuilder& cat, int l) {
  const std::string t = "B" + std::to_string(l) + " ";
  for (int p = l; p >= 1; --p) {
    const int q = 2 * l + 1 - p;
    cat.add({pq("so", p, q)}, t + "black=" + csv_range(p + 1, l) + " arrows=",
            p == l ? "split" : "BI");
  }
  cat.add({"so(" + std::to_string(2 * l + 1) + ")"}, t + "black=" + csv_range(1, l) + " arrows=", "compact");
}

void add_type_c(CatalogBuilder& cat, int l) {
  const std::string t = "C" + std::to_string(l) + " ";
  cat.add({"sp(" + std::to_string(2 * l) + ",R)"}, t + "black= arrows=", "split; CI");
  // sp(p,q), 1 <= p <= q: nodes 2,4,..,2p white.
  for (int p = 1; 2 * p <= l; ++p) {
    const int q = l - p;
    std::string black = csv_range(1, 2 * p - 1, 2);
    if (2 * p < l) black = join_csv(black, csv_range(2 * p + 1, l));
    cat.add({pq("sp", p, q)}, t + "black=" + black + " arrows=", "CII");
  }
  cat.add({"sp(" + std::to_string(l) + ")"}, t + "black=" + csv_range(1, l) + " arrows=", "compact");
}

void add_type_d(CatalogBuilder& cat, int l) {
  const std::string t = "D" + std::to_string(l) + " ";
  // so(p,q), p + q = 2l, p <= q.
  for (int p = l; p >= 1; --p) {
    const int q = 2 * l - p;
    std::string diagram;
    std::string notes = "DI";
    if (p == l) {
      diagram = t + "black= arrows=";
      notes = "split";
    } else if (p == l - 1) {
      diagram = t + "black= arrows=" + std::to_string(l - 1) + ":" + std::to_string(l);
      notes = "quasi-split";
    } else {
      diagram = t + "black=" + csv_range(p + 1, l) + " arrows=";
    }
    cat.add({pq("so", p, q)}, diagram, notes);
  }

  // so*(2l): odd nodes black; for odd l the last two nodes are paired.
  const std::string s2l = std::to_string(2 * l);
  std::vector<std::string> names{"so*(" + s2l + ")", "u*(" + std::to_string(l) + ",H)"};
  if (l % 2 == 0) {
    cat.add(names, t + "black=" + csv_range(1, l - 1, 2) + " arrows=",
            "DIII; u*_l(H) read as so*(2l), quaternionic skew-hermitian forms");
  } else {
    cat.add(names,
            t + "black=" + csv_range(1, l - 2, 2) + " arrows=" + std::to_string(l - 1) + ":" + std::to_string(l),
            "DIII; u*_l(H) read as so*(2l), quaternionic skew-hermitian forms");
  }
  cat.add({"so(" + s2l + ")"}, t + "black=" + csv_range(1, l) + " arrows=", "compact");
}

void add_exceptional(CatalogBuilder& cat) {
  if (cat.within(6)) {
    cat.add({"EI", "e6(6)"}, "E6 black= arrows=", "split");
    cat.add({"EII", "e6(2)"}, "E6 black= arrows=1:6,3:5", "quasi-split");
    cat.add({"EIII", "e6(-14)"}, "E6 black=3,4,5 arrows=1:6");
    cat.add({"EIV", "e6(-26)"}, "E6 black=2,3,4,5 arrows=");
    cat.add({"e6", "e6(-78)"}, "E6 black=1,2,3,4,5,6 arrows=", "compact");
  }
  if (cat.within(7)) {
    cat.add({"EV", "e7(7)"}, "E7 black= arrows=", "split");
    cat.add({"EVI", "e7(-5)"}, "E7 black=2,5,7 arrows=");
    cat.add({"EVII", "e7(-25)"}, "E7 black=2,3,4,5 arrows=");
    cat.add({"e7", "e7(-133)"}, "E7 black=1,2,3,4,5,6,7 arrows=", "compact");
  }
  if (cat.within(8)) {
    cat.add({"EVIII", "e8(8)"}, "E8 black= arrows=", "split");
    cat.add({"EIX", "e8(-24)"}, "E8 black=2,3,4,5 arrows=");
    cat.add({"e8", "e8(-248)"}, "E8 black=1,2,3,4,5,6,7,8 arrows=", "compact");
  }
  if (cat.within(4)) {
    cat.add({"FI", "f4(4)"}, "F4 black= arrows=", "split");
    cat.add({"FII", "f4(-20)"}, "F4 black=1,2,3 arrows=");
    cat.add({"f4", "f4(-52)"}, "F4 black=1,2,3,4 arrows=", "compact");
  }
  if (cat.within(2)) {
    cat.add({"G", "g2(2)"}, "G2 black= arrows=", "split");
    cat.add({"g2", "g2(-14)"}, "G2 black=1,2 arrows=", "compact");
  }
}

// A complex simple algebra viewed as a real one: two copies of its diagram,
// all white, omega exchanging the copies.
void add_complex(CatalogBuilder& cat, const std::string& type, int rank, std::vector<std::string> names) {
  std::string arrows;
  for (int i = 1; i <= rank; ++i) arrows = join_csv(arrows, std::to_string(i) + ":" + std::to_string(i + rank));
  std::vector<std::string> all = names;
  for (const auto& n : names) all.push_back(n + " as real");
  cat.add(all, type + "x" + type + " black= arrows=" + arrows, "complex simple algebra as a real form");
}

}  // namespace

std::vector<RealFormRecord> catalog(int rank_bound) {
  if (rank_bound < 1) throw std::invalid_argument("rank bound must be at least 1");
  CatalogBuilder cat(rank_bound);
  for (int l = 1; cat.within(l); ++l) add_type_a(cat, l);
  for (int l = 2; cat.within(l); ++l) add_type_b(cat, l);
  for (int l = 2; cat.within(l); ++l) add_type_c(cat, l);
  for (int l = 4; cat.within(l); ++l) add_type_d(cat, l);
  add_exceptional(cat);

  for (int l = 1; cat.within(l); ++l)
    add_complex(cat, "A" + std::to_string(l), l, {"sl(" + std::to_string(l + 1) + ",C)"});
  for (int l = 2; cat.within(l); ++l)
    add_complex(cat, "B" + std::to_string(l), l, {"so(" + std::to_string(2 * l + 1) + ",C)"});
  for (int l = 2; cat.within(l); ++l)
    add_complex(cat, "C" + std::to_string(l), l, {"sp(" + std::to_string(2 * l) + ",C)"});
  for (int l = 4; cat.within(l); ++l)
    add_complex(cat, "D" + std::to_string(l), l, {"so(" + std::to_string(2 * l) + ",C)"});
  for (int l : {6, 7, 8})
    if (cat.within(l)) add_complex(cat, "E" + std::to_string(l), l, {"e" + std::to_string(l) + "(C)"});
  if (cat.within(4)) add_complex(cat, "F4", 4, {"f4(C)"});
  if (cat.within(2)) add_complex(cat, "G2", 2, {"g2(C)"});
  return cat.take();
}

}  // namespace satake
