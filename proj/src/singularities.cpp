#include "picardlab/singularities.hpp"

#include <algorithm>

#include "picardlab/errors.hpp"

namespace picardlab {

char family_letter(SingFamily family) {
  switch (family) {
    case SingFamily::A: return 'A';
    case SingFamily::D: return 'D';
    case SingFamily::E: return 'E';
  }
  return '?';
}

SingType::SingType(SingFamily family, int index) : family_(family), index_(index) {
  const bool ok = (family == SingFamily::A && index >= 1) || (family == SingFamily::D && index >= 4) ||
                  (family == SingFamily::E && index >= 6 && index <= 8);
  if (!ok) {
    throw ParameterError(std::string("invalid singularity type ") + family_letter(family) + std::to_string(index));
  }
}

std::string SingType::name() const { return family_letter(family_) + std::to_string(index_); }

SingType SingType::parse(const std::string& name) {
  if (name.size() < 2) throw ParameterError("invalid singularity name '" + name + "'");
  SingFamily family;
  switch (name[0]) {
    case 'A': family = SingFamily::A; break;
    case 'D': family = SingFamily::D; break;
    case 'E': family = SingFamily::E; break;
    default: throw ParameterError("invalid singularity family in '" + name + "'");
  }
  std::size_t used = 0;
  int index = 0;
  try {
    index = std::stoi(name.substr(1), &used);
  } catch (const std::exception&) {
    throw ParameterError("invalid singularity index in '" + name + "'");
  }
  if (used != name.size() - 1) throw ParameterError("invalid singularity index in '" + name + "'");
  return SingType(family, index);
}

SingInventory::SingInventory(std::initializer_list<std::pair<SingType, Integer>> entries) {
  for (const auto& [type, count] : entries) add(type, count);
}

void SingInventory::add(const SingType& type, const Integer& count) {
  if (count < 0) throw ParameterError("singularity multiplicity must be nonnegative");
  if (count == 0) return;
  counts_[type] += count;
}

void SingInventory::merge(const SingInventory& other) {
  for (const auto& [type, count] : other.counts_) add(type, count);
}

Integer SingInventory::count(const SingType& type) const {
  auto it = counts_.find(type);
  return it == counts_.end() ? Integer(0) : it->second;
}

Integer SingInventory::total() const {
  Integer t = 0;
  for (const auto& [type, count] : counts_) t += count;
  return t;
}

std::string SingInventory::to_string() const {
  std::vector<std::pair<SingType, Integer>> items(counts_.begin(), counts_.end());
  // E, D, A; larger index first within a family.
  std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  std::string out = "{";
  for (const auto& [type, count] : items) {
    if (out.size() > 1) out += ", ";
    out += count.get_str() + "×" + type.name();
  }
  return out + "}";
}

std::string germ_name(const BranchGerm& germ) { return germ ? germ->name() : "smooth"; }

std::string describe(const ScenarioEntry& entry) {
  std::string out = entry.count.get_str() + "×" + germ_name(entry.germ);
  std::visit(
      [&out](const auto& site) {
        using S = std::decay_t<decltype(site)>;
        if constexpr (std::is_same_v<S, OffSpecialLoci>) {
          out += " off special loci";
        } else if constexpr (std::is_same_v<S, OnBranchFiberTransversal>) {
          out += " on branch fiber (transversal, n=" + std::to_string(site.parity_n) + ")";
        } else {
          out += " on B" + std::to_string(site.carrier);
          if (site.others.empty()) {
            out += " away from the other branch divisors";
          } else {
            out += " meeting";
            for (int j : site.others) out += " B" + std::to_string(j);
            out += " (contact " + std::to_string(site.contact) + ")";
          }
        }
      },
      entry.site);
  if (!entry.note.empty()) out += " [" + entry.note + "]";
  return out;
}

Integer resolution_curve_count(const SingInventory& inventory) {
  Integer total = 0;
  for (const auto& [type, count] : inventory.entries()) total += type.resolution_curve_count() * count;
  return total;
}

Integer picard_lower_bound(const SingInventory& inventory, int n_indep) {
  if (n_indep != 1 && n_indep != 2) {
    throw ParameterError("number of independent base divisors must be 1 (P2, a line) or 2 (F_e, Δ0 and F); got " +
                         std::to_string(n_indep));
  }
  return Integer(resolution_curve_count(inventory) + n_indep);
}

Integer h11(const Integer& chi, const Integer& K2, const Integer& q) { return Integer(10 * chi - K2 - 2 * q); }

SingType union_type(const BranchGerm& branch, int contact) {
  if (contact < 1) throw ParameterError("contact order must be positive, got " + std::to_string(contact));
  if (!branch) return SingType::A(2 * contact - 1);
  if (branch->family() != SingFamily::A) {
    throw TransportError("configuration outside the supported union rules: " + branch->name() +
                         " germ with a smooth curve through it");
  }
  if (contact != 1) {
    throw TransportError("configuration outside the supported union rules: " + branch->name() +
                         " germ with a smooth curve of contact " + std::to_string(contact));
  }
  return SingType::D(branch->index() + 3);
}

namespace {

const BidoubleSite& bidouble_site(const ScenarioEntry& entry) {
  const auto* site = std::get_if<BidoubleSite>(&entry.site);
  if (!site) throw TransportError("entry is not a bidouble configuration: " + describe(entry));
  const auto valid_index = [](int i) { return i >= 1 && i <= 3; };
  if (!valid_index(site->carrier)) throw TransportError("branch divisor index out of range: " + describe(entry));
  for (int j : site->others) {
    if (!valid_index(j) || j == site->carrier) throw TransportError("invalid meeting divisor: " + describe(entry));
  }
  return *site;
}

}  // namespace

SingInventory transport_bidouble(const BranchSingScenario& scenario) {
  SingInventory out;
  for (const auto& entry : scenario) {
    const BidoubleSite& site = bidouble_site(entry);
    if (site.others.size() > 1) {
      throw TransportError("no transport rule for a point on all three branch divisors: " + describe(entry));
    }
    if (site.others.empty()) {
      if (!entry.germ) throw TransportError("smooth point of a single branch divisor matches no rule: " + describe(entry));
      out.add(*entry.germ, 2 * entry.count);  // R3
      continue;
    }
    SingType joint = [&] {
      try {
        return union_type(entry.germ, site.contact);
      } catch (const std::exception& e) {
        throw TransportError(std::string(e.what()) + " in entry: " + describe(entry));
      }
    }();
    if (!entry.germ) {
      // R0 (union A1) or R1 (union A_{2n+1}, n >= 1).
      const int n = (joint.index() - 1) / 2;
      if (n >= 1) out.add(SingType::A(n), entry.count);
    } else {
      out.add(SingType::A(2 * entry.germ->index() + 1), entry.count);  // R2
    }
  }
  return out;
}

SingInventory transport_double(const SingInventory& branch_inventory) { return branch_inventory; }

SingInventory transport_cyclic(const BranchSingScenario& scenario, int degree) {
  if (degree <= 0) throw ParameterError("cyclic cover degree must be positive, got " + std::to_string(degree));
  SingInventory out;
  for (const auto& entry : scenario) {
    if (!entry.germ) throw TransportError("cyclic transport needs a singular germ: " + describe(entry));
    if (std::holds_alternative<OffSpecialLoci>(entry.site)) {
      out.add(*entry.germ, degree * entry.count);
    } else if (const auto* fiber = std::get_if<OnBranchFiberTransversal>(&entry.site)) {
      if (entry.germ->family() != SingFamily::A) {
        throw TransportError("pullback not ADE: on-fiber singularity must be of type A: " + describe(entry));
      }
      const int n = fiber->parity_n;
      if (n < 2 || n % 2 != 0) {
        throw TransportError("on-fiber A_{n-1} with n = " + std::to_string(n) +
                             " is outside the proven even-n rule: " + describe(entry));
      }
      if (entry.germ->index() != n - 1) {
        throw TransportError("on-fiber germ must be A_{n-1} for n = " + std::to_string(n) + ": " + describe(entry));
      }
      out.add(SingType::A(degree * n - 1), entry.count);
    } else {
      throw TransportError("bidouble site in a cyclic scenario: " + describe(entry));
    }
  }
  return out;
}

SingInventory branch_locus_inventory(const BranchSingScenario& scenario) {
  SingInventory out;
  for (const auto& entry : scenario) {
    const auto* site = std::get_if<BidoubleSite>(&entry.site);
    if (site && !site->others.empty()) {
      out.add(union_type(entry.germ, site->contact), entry.count);
    } else if (entry.germ) {
      out.add(*entry.germ, entry.count);
    }
  }
  return out;
}

}  // namespace picardlab
