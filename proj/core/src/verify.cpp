#include "whk/verify.hpp"

#include <algorithm>
#include <sstream>

namespace whk {

bool CheckList::all_pass() const {
  return std::all_of(lines.begin(), lines.end(),
                     [](const CheckLine& l) { return l.pass; });
}

void CheckList::add(std::string name, bool pass, std::string detail) {
  lines.push_back(CheckLine{std::move(name), pass, std::move(detail)});
}

namespace {

std::string show(const AbelianInvariants& inv) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < inv.factors.size(); ++i)
    os << (i ? "," : "") << inv.factors[i];
  os << "]";
  return os.str();
}

AbelianInvariants elementary(int p, std::int64_t rank) {
  AbelianInvariants inv;
  inv.factors.assign(static_cast<std::size_t>(rank), p);
  return inv;
}

}  // namespace

CheckList verify_elementary_abelian(int p, int max_k, const Cl1Options& opts) {
  CheckList out;
  for (int k = 1; k <= max_k; ++k) {
    FiniteGroup g = elementary_abelian(p, k);
    AbelianInvariants got = cl1_structure(g, opts);
    AbelianInvariants want = elementary(p, formulas::elementary_abelian_rank(p, k));
    out.add("cl1 EA(" + std::to_string(p) + "," + std::to_string(k) + ")",
            got == want, "got " + show(got) + " want " + show(want));
  }
  return out;
}

CheckList verify_theorem_a(const Cl1Options& opts) {
  CheckList out;

  struct SmallCase {
    const char* spec;
    std::int64_t rank;
  };
  for (const SmallCase c : {SmallCase{"ES(3,1,1)", 2}, SmallCase{"ES(3,1,2)", 2},
                            SmallCase{"AES(3,1)", 5}, SmallCase{"ES(5,1,1)", 4}}) {
    GroupSpec spec = GroupSpec::parse(c.spec);
    AbelianInvariants got = cl1_structure(spec.build(), opts);
    AbelianInvariants want = elementary(spec.p, c.rank);
    out.add(std::string("cl1 ") + c.spec, got == want,
            "got " + show(got) + " want " + show(want));
  }

  out.add("closed form M at order 3^5", formulas::generic_M(3, 5) == 20,
          "M = " + std::to_string(formulas::generic_M(3, 5)));
  out.add("closed form M at order 3^6", formulas::generic_M(3, 6) == 86,
          "M = " + std::to_string(formulas::generic_M(3, 6)));

  struct BigCase {
    const char* spec;
    std::int64_t rank;
    AbelianInvariants kernel;
  };
  std::vector<BigCase> cases;
  cases.push_back(BigCase{"ES(3,2,1)", 21, elementary(3, 1)});
  cases.push_back(BigCase{"ES(3,2,2)", 20, AbelianInvariants{}});
  cases.push_back(BigCase{"AES(3,2)", 87, elementary(3, 1)});
  for (const BigCase& c : cases) {
    GroupSpec spec = GroupSpec::parse(c.spec);
    FiniteGroup g = spec.build();
    DeflationData d = deflation(g, frattini(g), opts);
    AbelianInvariants want = elementary(spec.p, c.rank);
    out.add(std::string("cl1 ") + c.spec, d.cl1_parent == want,
            "got " + show(d.cl1_parent) + " want " + show(want));
    out.add(std::string("frattini deflation kernel of ") + c.spec,
            d.kernel == c.kernel && d.surjective,
            "got " + show(d.kernel) + " want " + show(c.kernel) +
                (d.surjective ? "" : " (deflation not surjective!)"));
  }
  return out;
}

std::vector<std::vector<int>> aligned_relation_rows(
    const FiniteGroup& g, const GeneticBasis& basis,
    const std::vector<RelationVector>& rels) {
  const int p = g.prime();
  if (!g.has_exponents() || g.exponent() != p)
    throw contract_error("aligned_relation_rows needs an elementary abelian group");
  const int k = g.pc_ngens();
  std::vector<std::vector<int>> psis = hyperplane_functionals(p, k);

  auto psi_of = [&](const std::vector<int>& psi, Elem e) {
    std::vector<int> x = g.exponents(e);
    int v = 0;
    for (int t = 0; t < k; ++t) v = (v + psi[static_cast<std::size_t>(t)] * x[static_cast<std::size_t>(t)]) % p;
    return v;
  };

  // entry index -> (column, unit rescale) for every index-p entry
  std::vector<int> column(basis.size(), -1);
  std::vector<int> rescale(basis.size(), 1);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const GeneticEntry& e = basis.entries[i];
    if (e.s.order() * static_cast<std::size_t>(p) != g.order()) continue;
    int col = -1;
    for (std::size_t q = 0; q < psis.size(); ++q) {
      bool kernel_matches = true;
      for (Elem s : e.s.elems)
        if (psi_of(psis[q], s) != 0) {
          kernel_matches = false;
          break;
        }
      if (kernel_matches) {
        col = static_cast<int>(q);
        break;
      }
    }
    if (col < 0) throw contract_error("no functional matches the hyperplane");
    column[i] = col;
    // the stored discrete log is mu * psi_norm; find mu on a vector where
    // psi_norm evaluates to 1
    int mu = 0;
    for (Elem v : g.elements())
      if (psi_of(psis[static_cast<std::size_t>(col)], v) == 1) {
        mu = static_cast<int>(e.q.dlog_of(v));
        break;
      }
    if (mu == 0) throw contract_error("functional alignment failed");
    int inv = 1;
    for (int t = 1; t < p; ++t)
      if (mu * t % p == 1) inv = t;
    rescale[i] = inv;
  }

  std::vector<std::vector<int>> rows;
  rows.reserve(rels.size());
  for (const RelationVector& r : rels) {
    std::vector<int> row(psis.size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (column[i] >= 0)
        row[static_cast<std::size_t>(column[i])] =
            static_cast<int>(r.e[i]) * rescale[i] % p;
    rows.push_back(std::move(row));
  }
  return rows;
}

CheckList verify_oracle(int p, int k, const Cl1Options& opts) {
  CheckList out;
  FiniteGroup g = elementary_abelian(p, k);
  GeneticBasis basis = genetic_basis(g, opts.max_order);
  std::vector<RelationVector> rels =
      relation_generators(g, basis, opts.workers, GeneratorSetMode::Minimal);
  std::vector<std::vector<int>> urows = aligned_relation_rows(g, basis, rels);
  std::vector<std::vector<int>> rrows = r_matrix(p, k);

  const int expected = static_cast<int>(binomial(p + k - 1, p));
  int rank_u = fp_rank(urows, p);
  int rank_r = fp_rank(rrows, p);
  std::vector<std::vector<int>> stacked = urows;
  stacked.insert(stacked.end(), rrows.begin(), rrows.end());
  int rank_both = fp_rank(stacked, p);

  std::string name = "oracle p=" + std::to_string(p) + " k=" + std::to_string(k);
  out.add(name + ": relation rank", rank_u == expected,
          std::to_string(rank_u) + " vs " + std::to_string(expected));
  out.add(name + ": evaluation-matrix rank (injectivity)", rank_r == expected,
          std::to_string(rank_r) + " vs " + std::to_string(expected));
  out.add(name + ": row spaces coincide", rank_both == expected,
          "stacked rank " + std::to_string(rank_both));
  return out;
}

CheckList verify_witness(const Cl1Options& opts) {
  (void)opts;
  CheckList out;
  {
    FiniteGroup g = extra_special(3, 2, 2);
    WitnessReport w = witness_w(g);
    out.add("witness ES(3,2,2): index-p components vanish",
            w.hyperplane_components_trivial);
    out.add("witness ES(3,2,2): w_Y generates the center section",
            w.y_value_order == w.y_modulus && w.y_modulus == 3,
            "order " + std::to_string(w.y_value_order) + " of " +
                std::to_string(w.y_modulus));
  }
  {
    FiniteGroup g = almost_extra_special(3, 2);
    WitnessReport w = witness_w(g);
    out.add("witness AES(3,2): index-p components vanish",
            w.hyperplane_components_trivial);
    out.add("witness AES(3,2): w_Y generates the order-3 derived section",
            w.y_value_order == 3 && w.y_modulus == 9,
            "order " + std::to_string(w.y_value_order) + " of " +
                std::to_string(w.y_modulus));
  }
  return out;
}

}  // namespace whk
