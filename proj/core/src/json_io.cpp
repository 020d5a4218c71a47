#include "hypaut/json_io.hpp"

#include <sstream>

namespace hypaut {

const char* to_string(Interpretation i) {
    return i == Interpretation::full_automorphism_group ? "full-automorphism-group"
                                                        : "linear-automorphisms-only";
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::realizable: return "realizable";
        case Verdict::not_realizable: return "not-realizable";
        case Verdict::outside_theorem_scope: return "outside-theorem-scope";
    }
    return "?";
}

const char* to_string(Reason r) {
    switch (r) {
        case Reason::divides_d_minus_1: return "divides-d-minus-1";
        case Reason::divides_d: return "divides-d";
        case Reason::order_criterion: return "order-criterion";
        case Reason::no_l_exists: return "no-l-exists";
    }
    return "?";
}

const char* to_string(WitnessFamily f) {
    switch (f) {
        case WitnessFamily::fermat: return "fermat";
        case WitnessFamily::chain: return "chain";
        case WitnessFamily::loop: return "loop";
        case WitnessFamily::klein: return "klein";
    }
    return "?";
}

const char* to_string(PrimalityCertainty c) {
    switch (c) {
        case PrimalityCertainty::proven_prime: return "proven-prime";
        case PrimalityCertainty::probable_prime: return "probable-prime";
        case PrimalityCertainty::composite: return "composite";
    }
    return "?";
}

ordered_json to_json(const AdmissibilityVerdict& v) {
    ordered_json j;
    j["value"] = v.value.str();
    j["verdict"] = to_string(v.verdict);
    j["reason"] = to_string(v.reason);
    if (v.ell)
        j["l"] = *v.ell;
    else
        j["l"] = nullptr;
    j["interpretation"] = to_string(v.interpretation);
    return j;
}

ordered_json to_json(const ExtremalReport& r) {
    ordered_json j;
    j["exists"] = r.exists;
    j["phi_value"] = r.phi_value.str();
    j["p"] = r.p ? ordered_json(r.p->str()) : ordered_json(nullptr);
    j["n_is_2"] = r.n_is_2;
    j["n_plus_2_prime"] = r.n_plus_2_prime;
    j["phi_primality"] = to_string(r.phi_primality.certainty);
    j["repunit_note"] = r.repunit_note;
    return j;
}

ordered_json to_json(const PrimeOrderBound& b) {
    ordered_json j;
    j["strict"] = b.strict.str();
    j["sharp"] = b.sharp ? ordered_json(b.sharp->str()) : ordered_json(nullptr);
    j["non_extremal"] = b.non_extremal ? ordered_json(b.non_extremal->str()) : ordered_json(nullptr);
    return j;
}

ordered_json to_json(const Factorization& f) {
    ordered_json j;
    j["value"] = f.value.str();
    j["sign"] = f.sign;
    j["factors"] = ordered_json::array();
    for (const auto& pf : f.factors) {
        ordered_json e;
        e["prime"] = pf.prime.str();
        e["exponent"] = pf.exponent;
        j["factors"].push_back(std::move(e));
    }
    return j;
}

ordered_json to_json(const GorinovBound& b) {
    ordered_json j;
    j["numerator"] = b.numerator.str();
    j["denominator"] = b.denominator.str();
    j["integral"] = b.integral;
    return j;
}

ordered_json to_json(const GorinovConjectureReport& r) {
    ordered_json j;
    j["bound"] = to_json(r.bound);
    j["all_realizable"] = r.all_realizable;
    j["primes"] = ordered_json::array();
    for (const auto& e : r.entries) {
        ordered_json je;
        je["p"] = e.p.str();
        switch (e.covered_by) {
            case GorinovConjectureReport::Case::cyclotomic_factor:
                je["case"] = "divides-cyclotomic-factor";
                break;
            case GorinovConjectureReport::Case::divides_d_minus_1:
                je["case"] = "divides-d-minus-1";
                break;
            case GorinovConjectureReport::Case::small_prime:
                je["case"] = "p-at-most-n-plus-2";
                break;
            case GorinovConjectureReport::Case::uncovered:
                je["case"] = "uncovered";
                break;
        }
        je["factor_exponent"] =
            e.factor_exponent ? ordered_json(*e.factor_exponent) : ordered_json(nullptr);
        je["verdict"] = to_json(e.verdict);
        j["primes"].push_back(std::move(je));
    }
    return j;
}

ordered_json to_json(const Form& f) {
    ordered_json j;
    j["n"] = f.n;
    j["d"] = f.d;
    j["terms"] = ordered_json::array();
    for (const auto& [m, c] : f.terms) {
        ordered_json t;
        t["coeff"] = c.str();
        t["exponents"] = m.exponents;
        j["terms"].push_back(std::move(t));
    }
    return j;
}

Form form_from_json(const ordered_json& j) {
    Form f{j.at("n").get<int>(), j.at("d").get<int>(), {}};
    for (const auto& t : j.at("terms")) {
        Monomial m{t.at("exponents").get<std::vector<unsigned>>()};
        f.add_term(std::move(m), Integer(t.at("coeff").get<std::string>()));
    }
    return f;
}

ordered_json to_json(const Signature& s) {
    ordered_json j;
    j["q"] = s.q.str();
    j["sigma"] = ordered_json::array();
    for (const Integer& v : s.sigma) j["sigma"].push_back(v.str());
    return j;
}

ordered_json to_json(const Witness& w) {
    ordered_json j;
    j["family"] = to_string(w.family);
    j["order"] = w.order.str();
    j["loop_length"] = w.loop_length;
    j["form"] = to_json(w.form);
    j["signature"] = to_json(w.signature);
    return j;
}

ordered_json to_json(const SingularityType& t) {
    ordered_json j;
    j["p"] = t.p.str();
    j["weights"] = ordered_json::array();
    for (const Integer& w : t.weights) j["weights"].push_back(w.str());
    GorensteinResult g = is_gorenstein(t);
    j["gorenstein"] = g.gorenstein;
    j["defect"] = g.defect.str();
    return j;
}

ordered_json to_json(const CMType& c) {
    ordered_json j;
    j["p"] = c.p.str();
    j["exponents"] = ordered_json::array();
    for (const Integer& e : c.exponents) j["exponents"].push_back(e.str());
    j["xi_notation"] = spectrum_xi_notation(c);
    return j;
}

ordered_json to_json(const PpavReport& r) {
    ordered_json j;
    j["n"] = r.n;
    j["d"] = r.d;
    j["p"] = r.p.str();
    j["g"] = r.g;
    j["extremal"] = r.extremal;
    j["klein_signature"] = to_json(r.klein_signature);
    j["tangent_degree"] = r.tangent_degree;
    j["label_tangent"] = r.label_tangent;
    j["label_residue"] = r.label_residue;
    j["spectrum"] = to_json(r.spectrum);
    j["stabilizer"] = ordered_json::array();
    for (const Integer& a : r.stabilizer) j["stabilizer"].push_back(a.str());
    j["stabilizer_element"] = r.stabilizer_element.str();
    j["permutation_order"] = r.permutation_order;
    j["cycles"] = ordered_json::array();
    for (const Cycle& c : r.cycles) {
        ordered_json jc = ordered_json::array();
        for (const Integer& e : c) jc.push_back(e.str());
        j["cycles"].push_back(std::move(jc));
    }
    j["eigen_multiplicities"] = r.eigen_multiplicities;
    j["component_dimension"] = r.component_dimension;
    return j;
}

ordered_json to_json(const GradedPieceReport& r) {
    ordered_json j;
    j["l"] = r.l;
    j["ambient_dim"] = r.ambient_dim;
    j["ideal_rank"] = r.ideal_rank;
    j["quotient_dim"] = r.quotient_dim;
    j["basis"] = ordered_json::array();
    for (const Monomial& m : r.basis) j["basis"].push_back(monomial_to_string(m));
    return j;
}

std::string spectrum_xi_notation(const CMType& c) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < c.exponents.size(); ++i) {
        if (i) os << ", ";
        os << "xi^" << c.exponents[i];
    }
    os << "}";
    return os.str();
}

std::string cycles_to_string(const std::vector<Cycle>& cycles) {
    std::ostringstream os;
    for (const Cycle& c : cycles) {
        os << "(";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) os << ",";
            os << c[i];
        }
        os << ")";
    }
    return os.str();
}

}  // namespace hypaut
