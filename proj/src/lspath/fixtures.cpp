#include "lspath/fixtures.hpp"

namespace lsp::fixtures {

BondedPoset one_element() { return BondedPoset::build({"pt"}, {}); }

BondedPoset a1_bond3() { return BondedPoset::build({"e", "s"}, {{"e", "s", 3}}); }

BondedPoset chain4_121() {
  return BondedPoset::build({"e", "x", "y", "z"},
                            {{"e", "x", 1}, {"x", "y", 2}, {"y", "z", 1}});
}

BondedPoset diamond_ok() {
  return BondedPoset::build({"bot", "a", "b", "top"},
                            {{"bot", "a", 2}, {"a", "top", 3}, {"bot", "b", 3}, {"b", "top", 2}});
}

BondedPoset diamond_bad() {
  return BondedPoset::build({"bot", "a", "b", "top"},
                            {{"bot", "a", 2}, {"a", "top", 2}, {"bot", "b", 3}, {"b", "top", 3}});
}

BondedPoset antichain3() {
  return BondedPoset::build({"bot", "a", "b", "c", "top"},
                            {{"bot", "a", 1},
                             {"bot", "b", 1},
                             {"bot", "c", 1},
                             {"a", "top", 1},
                             {"b", "top", 1},
                             {"c", "top", 1}});
}

BondedPoset i24() {
  return BondedPoset::build({"12", "13", "14", "23", "24", "34"},
                            {{"12", "13", 1},
                             {"13", "14", 1},
                             {"13", "23", 1},
                             {"14", "24", 1},
                             {"23", "24", 1},
                             {"24", "34", 1}});
}

BondedPoset hexagon() {
  return BondedPoset::build({"e", "a1", "b1", "a2", "b2", "w"},
                            {{"e", "a1", 1},
                             {"e", "b1", 1},
                             {"a1", "a2", 1},
                             {"a1", "b2", 2},
                             {"b1", "a2", 2},
                             {"b1", "b2", 1},
                             {"a2", "w", 1},
                             {"b2", "w", 1}});
}

std::vector<NamedPoset> all_valid() {
  std::vector<NamedPoset> out;
  out.push_back({"one-element", one_element()});
  out.push_back({"a1-bond3", a1_bond3()});
  out.push_back({"chain4-121", chain4_121()});
  out.push_back({"diamond", diamond_ok()});
  out.push_back({"antichain3", antichain3()});
  out.push_back({"i24", i24()});
  out.push_back({"hexagon", hexagon()});
  return out;
}

}  // namespace lsp::fixtures
