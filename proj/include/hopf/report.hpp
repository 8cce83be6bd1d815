#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hopf {

// Where an axiom broke: the basis tuple it was evaluated on plus both
// evaluated sides, rendered against the basis labels.
struct Witness {
  std::vector<size_t> idx;
  std::string where;
  std::string lhs;
  std::string rhs;
};

struct CheckItem {
  std::string label;
  bool pass = false;
  std::optional<Witness> witness;
};

// Ordered list of per-axiom verdicts. Labels appear in a fixed plan
// order; a witness is present exactly when the check failed.
struct Report {
  std::vector<CheckItem> items;

  bool ok() const {
    for (auto& it : items)
      if (!it.pass) return false;
    return true;
  }

  void add_pass(const std::string& label) { items.push_back({label, true, std::nullopt}); }

  void add_fail(const std::string& label, Witness w) {
    items.push_back({label, false, std::move(w)});
  }

  void add(const std::string& label, bool pass, std::optional<Witness> w = std::nullopt) {
    items.push_back({label, pass, pass ? std::nullopt : std::move(w)});
  }

  void merge(const Report& other, const std::string& prefix = "") {
    for (auto& it : other.items) items.push_back({prefix + it.label, it.pass, it.witness});
  }

  const CheckItem* find(const std::string& label) const {
    for (auto& it : items)
      if (it.label == label) return &it;
    return nullptr;
  }

  bool passed(const std::string& label) const {
    const CheckItem* it = find(label);
    return it != nullptr && it->pass;
  }

  std::string str() const {
    std::ostringstream out;
    for (auto& it : items) {
      out << (it.pass ? "  pass  " : "  FAIL  ") << it.label;
      if (it.witness) {
        out << "\n          at " << it.witness->where;
        out << "\n          lhs = " << it.witness->lhs;
        out << "\n          rhs = " << it.witness->rhs;
      }
      out << "\n";
    }
    return out.str();
  }
};

}  // namespace hopf
