#include "doctest.h"
#include "oracles.hpp"
#include "satake/satake.hpp"

#include <random>

using namespace satake;

namespace {

const std::vector<RealFormRecord>& records() {
  static const std::vector<RealFormRecord> r = catalog();
  return r;
}

const RealFormRecord& rec(std::string_view name) {
  const RealFormRecord* r = find_record(records(), name);
  REQUIRE_MESSAGE(r != nullptr, name);
  return *r;
}

SatakeDiagram split(std::vector<SimpleType> t) { return make_diagram(shared_root_system(t), {}); }

}  // namespace

TEST_CASE("validate accepts split and compact forms of every type") {
  for (auto t : {SimpleType{Family::A, 4}, SimpleType{Family::B, 3}, SimpleType{Family::C, 3},
                 SimpleType{Family::D, 5}, SimpleType{Family::E, 6}, SimpleType{Family::E, 8},
                 SimpleType{Family::F, 4}, SimpleType{Family::G, 2}}) {
    CAPTURE(t.label());
    CHECK(validate(split({t})).ok());
    const auto rs = shared_root_system({t});
    NodeSet all;
    for (int i = 0; i < rs->rank(); ++i) all.insert(i);
    CHECK(validate(make_diagram(rs, all)).ok());
  }
}

TEST_CASE("validate examples") {
  CHECK(validate(parse_diagram("A3 black=1,3 arrows=")).ok());
  const ValidationReport bad = validate(parse_diagram("A2 black=1 arrows=1:2"));
  CHECK_FALSE(bad.ok());
  CHECK(bad.has("arrow-touches-black"));
  CHECK(bad.summary().find("arrow-touches-black") != std::string::npos);
}

TEST_CASE("validate reports each failing check") {
  SUBCASE("omega does not preserve the Cartan matrix") {
    const auto r = validate(parse_diagram("B2 black= arrows=1:2"));
    CHECK(r.has("omega-cartan"));
  }
  SUBCASE("omega is not an involution") {
    SatakeDiagram d = split({{Family::A, 3}});
    d.omega = {1, 2, 0};
    CHECK(validate(d).has("omega-involution"));
  }
  SUBCASE("omega undefined on a white node") {
    SatakeDiagram d = split({{Family::A, 3}});
    d.omega[1] = -1;
    CHECK(validate(d).has("omega-domain"));
  }
  SUBCASE("black node out of range") {
    SatakeDiagram d = split({{Family::A, 2}});
    d.black.insert(4);
    CHECK(validate(d).has("partition"));
  }
  SUBCASE("eps not a diagram automorphism") {
    const auto r = validate(parse_diagram("A3 black=1,2 arrows="));
    CHECK(r.has("epsilon-automorphism"));
  }
  SUBCASE("admissible but not a Satake diagram") {
    // su(3,1) without its arrow passes every other check
    const auto r = validate(parse_diagram("A3 black=2 arrows="));
    CHECK(r.failures.size() == 2);  // nodes 1 and 3
    for (const auto& f : r.failures) CHECK(f.check == "white-parity");
    CHECK(validate(parse_diagram("A3 black=2 arrows=1:3")).ok());
    CHECK(validate(parse_diagram("F4 black=2,3,4 arrows=")).has("white-parity"));
    CHECK(validate(parse_diagram("C3 black=1 arrows=")).has("white-parity"));
  }
}

TEST_CASE("catalogue lookup examples") {
  const RealFormRecord& sl3 = rec("sl(3,R)");
  CHECK(sl3.diagram.rs->label() == "A2");
  CHECK(sl3.diagram.black.empty());
  CHECK(sl3.diagram.omega == std::vector<int>{0, 1});

  const RealFormRecord& su3 = rec("su(3)");
  CHECK(su3.diagram.black == NodeSet{0, 1});
  CHECK(su3.diagram.omega == std::vector<int>{-1, -1});

  const RealFormRecord& slc = rec("sl(2,C) as real");
  CHECK(slc.diagram.rs->label() == "A1xA1");
  CHECK(slc.diagram.black.empty());
  CHECK(slc.diagram.omega == std::vector<int>{1, 0});
  CHECK(slc.is_complex());
}

TEST_CASE("name lookup is case and whitespace insensitive") {
  CHECK(find_record(records(), "SL(3, R)") == find_record(records(), "sl(3,R)"));
  CHECK(find_record(records(), " e6(-14) ") == find_record(records(), "EIII"));
  CHECK(find_record(records(), "sl(3,Q)") == nullptr);
  const auto near = nearest_names(records(), "su(3,l)");
  REQUIRE_FALSE(near.empty());
  CHECK(near.size() <= 3);
}

TEST_CASE("catalogue rows match the standard tables") {
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"su(3,2)", "A4 black= arrows=1:4,2:3"},
      {"su(4,1)", "A4 black=2,3 arrows=1:4"},
      {"su(2,2)", "A3 black= arrows=1:3"},
      {"su*(6)", "A5 black=1,3,5 arrows="},
      {"sl(4,R)", "A3 black= arrows="},
      {"so(2,5)", "B3 black=3 arrows="},
      {"so(1,6)", "B3 black=2,3 arrows="},
      {"sp(6,R)", "C3 black= arrows="},
      {"sp(1,2)", "C3 black=1,3 arrows="},
      {"sp(2,2)", "C4 black=1,3 arrows="},
      {"so(4,4)", "D4 black= arrows="},
      {"so(3,5)", "D4 black= arrows=3:4"},
      {"so(2,6)", "D4 black=3,4 arrows="},
      {"so*(10)", "D5 black=1,3 arrows=4:5"},
      {"so*(8)", "D4 black=1,3 arrows="},
      {"EII", "E6 black= arrows=1:6,3:5"},
      {"EIII", "E6 black=3,4,5 arrows=1:6"},
      {"EIV", "E6 black=2,3,4,5 arrows="},
      {"EVI", "E7 black=2,5,7 arrows="},
      {"EIX", "E8 black=2,3,4,5 arrows="},
      {"FII", "F4 black=1,2,3 arrows="},
      {"G", "G2 black= arrows="},
      {"sl(2,C)", "A1xA1 black= arrows=1:2"},
      {"so(7,C)", "B3xB3 black= arrows=1:4,2:5,3:6"},
  };
  for (const auto& [name, text] : expected) {
    CAPTURE(name);
    CHECK(format_diagram(rec(name).diagram) == text);
  }
}

TEST_CASE("catalogue counts per type") {
  std::map<std::string, int> count;
  for (const auto& r : records()) ++count[r.diagram.rs->label()];
  // simple real forms: A3 = sl4R, su*4, su(3,1), su(2,2), su(4)
  CHECK(count["A1"] == 2);
  CHECK(count["A3"] == 5);
  CHECK(count["B3"] == 4);
  CHECK(count["C3"] == 3);
  CHECK(count["D4"] == 6);
  CHECK(count["D5"] == 7);
  CHECK(count["E6"] == 5);
  CHECK(count["E7"] == 4);
  CHECK(count["E8"] == 3);
  CHECK(count["F4"] == 3);
  CHECK(count["G2"] == 2);
  CHECK(count["E8xE8"] == 1);
  CHECK(count.count("D3") == 0);
}

TEST_CASE("catalogue respects the rank bound") {
  for (int bound : {1, 3, 6}) {
    for (const auto& r : catalog(bound)) {
      CAPTURE(r.name());
      CHECK(r.diagram.rs->components().front().rank <= bound);
    }
  }
  CHECK(catalog(2).size() < catalog(8).size());
}

TEST_CASE("every catalogue entry is valid with unique names") {
  std::set<std::string> seen;
  for (const auto& r : records()) {
    CAPTURE(r.name());
    CHECK(validate(r.diagram).ok());
    for (const auto& n : r.names) CHECK(seen.insert(normalize_name(n)).second);
  }
}

TEST_CASE("parse and format examples") {
  const SatakeDiagram d = parse_diagram("A3 black=1,3 arrows=");
  CHECK(d.black == NodeSet{0, 2});
  CHECK(format_diagram(d) == "A3 black=1,3 arrows=");
  CHECK(parse_diagram("A2 black= arrows=1:2") == rec("su(2,1)").diagram);
  CHECK(format_diagram(parse_diagram("  A3   black=3,1  arrows= ")) == "A3 black=1,3 arrows=");
  CHECK(format_diagram(parse_diagram("A5 black= arrows=2:4,5:1")) == "A5 black= arrows=1:5,2:4");
  CHECK(format_diagram(parse_diagram("D4xD4 black=1,5 arrows=2:6")) == "D4xD4 black=1,5 arrows=2:6");
}

TEST_CASE("parse errors carry a position") {
  auto position_of = [](std::string_view text) -> long {
    try {
      parse_diagram(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("Q3 black= arrows=") == 0);
  CHECK(position_of("A3 black=5 arrows=") > 0);
  CHECK(position_of("A3 black=1") >= 0);
  CHECK(position_of("A3 black=1,x arrows=") > 0);
  CHECK(position_of("A3 black= arrows=1:2:3") > 0);
  CHECK(position_of("A3 black= arrows= extra") > 0);
  CHECK(position_of("") >= 0);
  CHECK_THROWS_AS(parse_diagram("B1 black= arrows="), ParseError);
  CHECK_THROWS_AS(parse_diagram("A2xA3 black= arrows="), ParseError);
  try {
    parse_diagram("Q3 black= arrows=");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("column 1") != std::string::npos);
  }
}

TEST_CASE("text format round trips over the catalogue and random diagrams") {
  for (const auto& r : records()) {
    CAPTURE(r.name());
    const std::string text = format_diagram(r.diagram);
    CHECK(parse_diagram(text) == r.diagram);
    CHECK(format_diagram(parse_diagram(text)) == text);
  }
  std::mt19937 rng(2024);
  for (int k = 0; k < 300; ++k) {
    const SatakeDiagram d = oracle::random_diagram(rng);
    const std::string text = format_diagram(d);
    CAPTURE(text);
    CHECK(parse_diagram(text) == d);
  }
}

TEST_CASE("render_diagram draws nodes, bonds and arrows") {
  const std::string e3 = render_diagram(rec("EIII").diagram);
  CHECK(e3.find("•") != std::string::npos);
  CHECK(e3.find("○") != std::string::npos);
  CHECK(e3.find("arrows: 1<->6") != std::string::npos);
  CHECK(e3.find("\x1b[") == std::string::npos);
  CHECK(render_diagram(rec("EIII").diagram, true).find("\x1b[") != std::string::npos);

  const std::string g2 = render_diagram(rec("G").diagram);
  CHECK(g2.find("arrows: none") != std::string::npos);
  CHECK(g2.find("≡") != std::string::npos);

  const std::string b3 = render_diagram(rec("so(2,5)").diagram);
  CHECK(b3.find("==>") != std::string::npos);
  const std::string c3 = render_diagram(rec("sp(6,R)").diagram);
  CHECK(c3.find("<==") != std::string::npos);
  const std::string d4 = render_diagram(rec("so(4,4)").diagram);
  CHECK(d4.find('|') != std::string::npos);
}

namespace {

SatakeDiagram transport(const SatakeDiagram& d, const NodePermutation& p) {
  NodeSet black;
  for (int i : d.black) black.insert(p(i));
  std::vector<std::pair<int, int>> arrows;
  for (auto [i, j] : d.arrows()) arrows.emplace_back(p(i), p(j));
  return make_diagram(d.rs, black, arrows);
}

}  // namespace

TEST_CASE("validate accepts exactly the catalogue diagrams up to diagram symmetry") {
  std::vector<SimpleType> types;
  for (int r = 1; r <= 7; ++r) types.push_back({Family::A, r});
  for (int r = 2; r <= 6; ++r) types.push_back({Family::B, r});
  for (int r = 2; r <= 6; ++r) types.push_back({Family::C, r});
  for (int r = 4; r <= 7; ++r) types.push_back({Family::D, r});
  for (int r = 6; r <= 8; ++r) types.push_back({Family::E, r});
  types.push_back({Family::F, 4});
  types.push_back({Family::G, 2});
  for (const SimpleType& t : types) {
    CAPTURE(t.label());
    const auto rs = shared_root_system({t});
    const int n = rs->rank();
    const auto autos = oracle::diagram_automorphisms(*rs);

    std::set<std::string> accepted;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      NodeSet black;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) black.insert(i);
      for (const auto& a : autos) {
        if (!a.is_involution()) continue;
        std::vector<std::pair<int, int>> arrows;
        bool keeps = true;
        for (int i = 0; i < n; ++i) {
          keeps = keeps && black.count(i) == black.count(a(i));
          if (!black.count(i) && a(i) > i) arrows.emplace_back(i, a(i));
        }
        if (!keeps) continue;
        const SatakeDiagram d = make_diagram(rs, black, arrows);
        if (validate(d).ok()) accepted.insert(format_diagram(d));
      }
    }
    std::set<std::string> expected;
    for (const auto& r : records())
      if (r.diagram.rs->label() == rs->label())
        for (const auto& a : autos) expected.insert(format_diagram(transport(r.diagram, a)));
    CHECK(accepted == expected);
  }
}
