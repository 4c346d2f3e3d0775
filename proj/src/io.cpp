#include "unimod/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace unimod {

namespace {

using Json = nlohmann::ordered_json;

Json scalar_to_json(const Scalar& s) {
    Json out = Json::array();
    for (const auto& [e, c] : s.terms()) out.push_back(Json::array({e, rational_str(c)}));
    return out;
}

Scalar scalar_from_json(const Json& j, unsigned order) {
    if (!j.is_array()) throw ParseError("scalar must be a list of [exponent, rational] pairs");
    std::vector<std::pair<long, Rat>> terms;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_string())
            throw ParseError("scalar term must be [integer exponent, rational string]");
        terms.emplace_back(item[0].get<long>(), parse_rational(item[1].get<std::string>()));
    }
    return Scalar::from_terms(order, terms);
}

Json vector_to_json(const Vector& v) {
    Json out = Json::array();
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(scalar_to_json(v[i]));
    return out;
}

Vector vector_from_json(const Json& j, unsigned order, std::size_t expect) {
    if (!j.is_array() || j.size() != expect)
        throw ParseError("vector has wrong length (expected " + std::to_string(expect) + ")");
    Vector v(expect, order);
    for (std::size_t i = 0; i < expect; ++i) v[i] = scalar_from_json(j[i], order);
    return v;
}

Json dense_matrix_to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
    return out;
}

Matrix dense_matrix_from_json(const Json& j, unsigned order, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows) throw ParseError("matrix has wrong row count");
    Matrix m(rows, cols, order);
    for (std::size_t i = 0; i < rows; ++i) m.set_row(i, vector_from_json(j[i], order, cols));
    return m;
}

// sparse [i, j, k, scalar] triples for the multiplication tensor
Json mult_to_json(const StructureAlgebra& a) {
    Json out = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (!a.c(i, j, k).is_zero())
                    out.push_back(Json::array({i, j, k, scalar_to_json(a.c(i, j, k))}));
    return out;
}

// sparse [i, k, j, scalar]: target pair (i,k) in the tensor square, source j
Json tensor_map_to_json(const Matrix& m, std::size_t second_dim) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(r, j).is_zero())
                out.push_back(Json::array(
                    {r / second_dim, r % second_dim, j, scalar_to_json(m.at(r, j))}));
    return out;
}

Matrix tensor_map_from_json(const Json& j, unsigned order, std::size_t first_dim,
                            std::size_t second_dim, std::size_t cols) {
    Matrix m(first_dim * second_dim, cols, order);
    if (!j.is_array()) throw ParseError("sparse tensor map must be a list");
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 4)
            throw ParseError("sparse tensor entry must be [i, k, j, scalar]");
        std::size_t i = item[0].get<std::size_t>(), k = item[1].get<std::size_t>(),
                    c = item[2].get<std::size_t>();
        if (i >= first_dim || k >= second_dim || c >= cols)
            throw ParseError("sparse tensor entry index out of range");
        m.at(i * second_dim + k, c) = scalar_from_json(item[3], order);
    }
    return m;
}

Json algebra_to_json(const StructureAlgebra& a) {
    Json out;
    out["dim"] = a.dim();
    out["basis_names"] = a.basis_names();
    out["unit"] = vector_to_json(a.unit());
    out["mult"] = mult_to_json(a);
    return out;
}

StructureAlgebra algebra_from_json(const Json& j, unsigned order) {
    if (!j.contains("dim") || !j["dim"].is_number_unsigned())
        throw ParseError("algebra block needs a dim field");
    std::size_t n = j["dim"].get<std::size_t>();
    std::vector<std::string> names;
    if (j.contains("basis_names")) {
        for (const auto& s : j["basis_names"]) names.push_back(s.get<std::string>());
        if (names.size() != n) throw ParseError("basis_names length differs from dim");
    } else {
        for (std::size_t i = 0; i < n; ++i) names.push_back("b" + std::to_string(i));
    }
    if (!j.contains("unit")) throw ParseError("algebra block needs a unit field");
    StructureAlgebra a(order, names, vector_from_json(j["unit"], order, n));
    if (!j.contains("mult") || !j["mult"].is_array())
        throw ParseError("algebra block needs a sparse mult list");
    for (const auto& item : j["mult"]) {
        if (!item.is_array() || item.size() != 4)
            throw ParseError("mult entry must be [i, j, k, scalar]");
        std::size_t i = item[0].get<std::size_t>(), jj = item[1].get<std::size_t>(),
                    k = item[2].get<std::size_t>();
        if (i >= n || jj >= n || k >= n) throw ParseError("mult entry index out of range");
        a.set_c(i, jj, k, scalar_from_json(item[3], order));
    }
    a.finalize();
    return a;
}

}  // namespace

InstanceFile parse_instance(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("JSON parse error: ") + e.what());
    }
    InstanceFile f;
    if (!j.contains("field") || !j["field"].contains("cyclotomic_order"))
        throw ParseError("missing field.cyclotomic_order");
    f.cyclotomic_order = j["field"]["cyclotomic_order"].get<unsigned>();
    if (f.cyclotomic_order == 0) throw ParseError("cyclotomic_order must be positive");
    unsigned ord = f.cyclotomic_order;

    if (!j.contains("hopf")) throw ParseError("missing hopf block");
    const Json& h = j["hopf"];
    f.hopf.algebra = algebra_from_json(h, ord);
    std::size_t n = f.hopf.algebra.dim();
    if (!h.contains("comult")) throw ParseError("hopf block needs comult");
    f.hopf.comult = tensor_map_from_json(h["comult"], ord, n, n, n);
    if (!h.contains("counit")) throw ParseError("hopf block needs counit");
    f.hopf.counit = vector_from_json(h["counit"], ord, n);
    if (!h.contains("antipode")) throw ParseError("hopf block needs antipode");
    f.hopf.antipode = dense_matrix_from_json(h["antipode"], ord, n, n);

    if (j.contains("comodule_algebra")) {
        const Json& c = j["comodule_algebra"];
        ComodulePresentation p;
        p.algebra = algebra_from_json(c, ord);
        if (!c.contains("coaction")) throw ParseError("comodule block needs coaction");
        p.coaction = tensor_map_from_json(c["coaction"], ord, n, p.algebra.dim(), p.algebra.dim());
        f.comodule = std::move(p);
    }
    if (j.contains("frobenius_forms")) {
        if (!f.comodule) throw ParseError("frobenius_forms without a comodule block");
        for (const auto& item : j["frobenius_forms"]) {
            if (!item.contains("name") || !item.contains("values"))
                throw ParseError("frobenius form needs name and values");
            f.frobenius_forms.push_back(
                {item["name"].get<std::string>(),
                 vector_from_json(item["values"], ord, f.comodule->algebra.dim())});
        }
    }
    if (j.contains("grouplike_candidates")) {
        for (const auto& item : j["grouplike_candidates"])
            f.grouplike_candidates.push_back(vector_from_json(item, ord, n));
    }
    return f;
}

InstanceFile load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_instance(ss.str());
}

std::string emit_instance(const InstanceFile& f) {
    Json j;
    j["format"] = "hopf-comodule-instance";
    j["field"] = Json{{"cyclotomic_order", f.cyclotomic_order}};
    Json h = algebra_to_json(f.hopf.algebra);
    h["comult"] = tensor_map_to_json(f.hopf.comult, f.hopf.algebra.dim());
    h["counit"] = vector_to_json(f.hopf.counit);
    h["antipode"] = dense_matrix_to_json(f.hopf.antipode);
    j["hopf"] = std::move(h);
    if (f.comodule) {
        Json c = algebra_to_json(f.comodule->algebra);
        c["coaction"] = tensor_map_to_json(f.comodule->coaction, f.comodule->algebra.dim());
        j["comodule_algebra"] = std::move(c);
    }
    if (!f.frobenius_forms.empty()) {
        Json forms = Json::array();
        for (const auto& form : f.frobenius_forms)
            forms.push_back(Json{{"name", form.name}, {"values", vector_to_json(form.lambda)}});
        j["frobenius_forms"] = std::move(forms);
    }
    if (!f.grouplike_candidates.empty()) {
        Json cands = Json::array();
        for (const auto& g : f.grouplike_candidates) cands.push_back(vector_to_json(g));
        j["grouplike_candidates"] = std::move(cands);
    }
    return j.dump(2) + "\n";
}

InstanceFile instance_of(const HopfData& h) {
    InstanceFile f;
    f.cyclotomic_order = h.order();
    f.hopf = h.presentation();
    return f;
}

InstanceFile instance_of(const ComoduleAlgebra& c) {
    InstanceFile f = instance_of(c.hopf());
    f.comodule = c.presentation();
    f.frobenius_forms = c.forms();
    f.grouplike_candidates = c.grouplike_candidates();
    return f;
}

ComoduleAlgebra comodule_from_instance(const InstanceFile& f, const std::string& form_name,
                                       std::uint64_t seed) {
    if (!f.comodule) throw ParseError("instance has no comodule_algebra block");
    auto hopf = std::make_shared<HopfData>(f.hopf);
    std::vector<NamedForm> forms = f.frobenius_forms;
    if (!form_name.empty()) {
        std::vector<NamedForm> reordered;
        for (const auto& form : forms)
            if (form.name == form_name) reordered.push_back(form);
        if (reordered.empty())
            throw ParseError("no Frobenius form named '" + form_name + "' in instance");
        for (const auto& form : forms)
            if (form.name != form_name) reordered.push_back(form);
        forms = std::move(reordered);
    }
    return ComoduleAlgebra(std::move(hopf), *f.comodule, std::move(forms),
                           f.grouplike_candidates, seed);
}

std::string scalar_json_str(const Scalar& s) { return scalar_to_json(s).dump(); }

Scalar scalar_from_json_str(const std::string& text, unsigned order) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("JSON parse error: ") + e.what());
    }
    return scalar_from_json(j, order);
}

namespace {

std::string term_str(const Scalar& c, const std::string& name, bool& first) {
    std::string cs = c.str();
    bool compound = cs.find('+') != std::string::npos || cs.find(" - ") != std::string::npos;
    std::ostringstream os;
    if (first) {
        first = false;
    } else {
        os << " + ";
    }
    if (name.empty() || name == "1") {
        os << (compound ? "(" + cs + ")" : cs);
    } else if (cs == "1") {
        os << name;
    } else {
        os << (compound ? "(" + cs + ")" : cs) << "*" << name;
    }
    return os.str();
}

}  // namespace

std::string element_str(const Vector& v, const std::vector<std::string>& names) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        os << term_str(v[i], names[i], first);
    }
    return first ? "0" : os.str();
}

std::string covector_str(const Vector& v, const std::vector<std::string>& names) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        os << term_str(v[i], "del(" + names[i] + ")", first);
    }
    return first ? "0" : os.str();
}

std::string invariants_text(const HopfData& h) {
    const auto& names = h.algebra().basis_names();
    std::ostringstream os;
    os << "dim(H) = " << h.dim() << "\n";
    os << "integral Lambda = " << element_str(h.integral(), names) << "\n";
    os << "distinguished character alpha = " << covector_str(h.alpha(), names) << "\n";
    os << "cointegral lambda_H = " << covector_str(h.cointegral(), names) << "\n";
    os << "distinguished grouplike g_H = " << element_str(h.grouplike(), names) << "\n";
    os << "unimodular(H) = " << (h.unimodular() ? "true" : "false") << "\n";
    os << "unimodular(H*) = " << (h.dual_unimodular() ? "true" : "false") << "\n";
    os << "S^4 identity = " << (h.radford_s4_holds() ? "ok" : "FAILED") << "\n";
    return os.str();
}

std::string invariants_json(const HopfData& h) {
    Json j;
    j["dim"] = h.dim();
    j["integral"] = vector_to_json(h.integral());
    j["alpha"] = vector_to_json(h.alpha());
    j["cointegral"] = vector_to_json(h.cointegral());
    j["grouplike"] = vector_to_json(h.grouplike());
    j["unimodular"] = h.unimodular();
    j["dual_unimodular"] = h.dual_unimodular();
    j["s4_identity"] = h.radford_s4_holds();
    return j.dump(2) + "\n";
}

namespace {

Json pit_to_json(const PitCertificate& c) {
    Json j;
    j["deterministic"] = c.deterministic;
    j["points_evaluated"] = c.points_evaluated;
    j["degree_bound"] = c.degree_bound;
    if (!c.deterministic) {
        j["seed"] = c.seed;
        j["trials"] = c.trials;
        j["sample_bound"] = c.sample_bound;
    }
    return j;
}

}  // namespace

std::string report_text(const UnimodularReport& r, const std::vector<std::string>& basis_names) {
    std::ostringstream os;
    if (!r.label.empty()) os << r.label << ": ";
    os << "verdict = " << r.verdict_str() << "\n";
    if (r.witness) os << "witness = " << element_str(*r.witness, basis_names) << "\n";
    os << "dim W = " << r.solution_space.dim() << "\n";
    os << "path = " << r.path << "\n";
    os << "frobenius form (" << r.frobenius_form_name
       << ") = " << covector_str(r.frobenius_form, basis_names) << "\n";
    if (r.pit && !r.pit->deterministic)
        os << "pit = sampled (seed " << r.pit->seed << ", trials " << r.pit->trials << ")\n";
    return os.str();
}

std::string report_json(const UnimodularReport& r) {
    Json j;
    if (!r.label.empty()) j["label"] = r.label;
    j["verdict"] = r.verdict_str();
    if (r.witness) j["witness"] = vector_to_json(*r.witness);
    j["solution_dim"] = r.solution_space.dim();
    Json basis = Json::array();
    for (std::size_t i = 0; i < r.solution_space.dim(); ++i)
        basis.push_back(vector_to_json(r.solution_space.basis_vector(i)));
    j["solution_basis"] = std::move(basis);
    j["path"] = r.path;
    j["frobenius_form"] =
        Json{{"name", r.frobenius_form_name}, {"values", vector_to_json(r.frobenius_form)}};
    if (r.pit) j["pit"] = pit_to_json(*r.pit);
    return j.dump(2) + "\n";
}

std::vector<Scalar> parse_scalar_list(const std::string& text, unsigned order) {
    std::vector<Scalar> out;
    std::string item;
    std::istringstream ss(text);
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw ParseError("empty scalar in list");
        // forms: rational | z | z^k | rational*z^k
        Rat coef(1);
        std::string rest = item;
        auto star = item.find('*');
        if (star != std::string::npos) {
            coef = parse_rational(item.substr(0, star));
            rest = item.substr(star + 1);
        }
        if (rest.empty()) throw ParseError("malformed scalar '" + item + "'");
        if (rest[0] == 'z') {
            long e = 1;
            if (rest.size() > 1) {
                if (rest[1] != '^') throw ParseError("malformed scalar '" + item + "'");
                e = std::stol(rest.substr(2));
            }
            out.push_back(Scalar(coef, order) * Scalar::zeta(order, e));
        } else {
            if (star != std::string::npos) throw ParseError("malformed scalar '" + item + "'");
            out.push_back(Scalar(parse_rational(rest), order));
        }
    }
    return out;
}

}  // namespace unimod
