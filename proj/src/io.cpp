#include "symcube/io.hpp"

#include <fstream>
#include <sstream>

namespace symcube {

namespace {

std::vector<long> long_vector_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw parse_error(std::string(what) + " must be an array");
    std::vector<long> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw parse_error(std::string(what) + " must hold integers");
        out.push_back(v.get<long>());
    }
    return out;
}

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw parse_error(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

} // namespace

Json partition_to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
    try {
        return Partition(long_vector_from_json(j, "partition"));
    } catch (const invalid_input& e) {
        throw parse_error(e.what());
    }
}

Json weight_to_json(const GLWeight& w) {
    return Json{{"n", w.n}, {"entries", w.entries}};
}

GLWeight weight_from_json(const Json& j) {
    const Json& n = require(j, "n");
    if (!n.is_number_integer()) throw parse_error("weight n must be an integer");
    try {
        return GLWeight(n.get<int>(), long_vector_from_json(require(j, "entries"), "entries"));
    } catch (const invalid_input& e) {
        throw parse_error(e.what());
    }
}

Json template_to_json(const WeightTemplate& t) {
    return Json{{"prefix", t.prefix}, {"suffix", t.suffix}};
}

WeightTemplate template_from_json(const Json& j) {
    return WeightTemplate(long_vector_from_json(require(j, "prefix"), "prefix"),
                          long_vector_from_json(require(j, "suffix"), "suffix"));
}

Json gaussian_to_json(const Gaussian& g) {
    return Json{{"re", rat_to_string(g.re)}, {"im", rat_to_string(g.im)}};
}

Gaussian gaussian_from_json(const Json& j) {
    const Json& re = require(j, "re");
    const Json& im = require(j, "im");
    if (!re.is_string() || !im.is_string())
        throw parse_error("Gaussian parts must be rational strings");
    return Gaussian(rat_from_string(re.get<std::string>()),
                    rat_from_string(im.get<std::string>()));
}

Json laurent_to_json(const Laurent& l) {
    Json eps = Json::object();
    for (const auto& [d, c] : l.terms()) eps[std::to_string(d)] = gaussian_to_json(c);
    return Json{{"eps", eps}};
}

Laurent laurent_from_json(const Json& j) {
    if (j.is_object() && j.contains("re")) return Laurent(gaussian_from_json(j));
    const Json& eps = require(j, "eps");
    if (!eps.is_object()) throw parse_error("\"eps\" must map degrees to Gaussians");
    Laurent out;
    for (const auto& [key, val] : eps.items()) {
        int degree = 0;
        try {
            degree = std::stoi(key);
        } catch (const std::exception&) {
            throw parse_error("bad epsilon degree \"" + key + "\"");
        }
        out += Laurent::monomial(degree, gaussian_from_json(val));
    }
    return out;
}

Json cubic_form_to_json(const CubicForm& f) {
    Json terms = Json::array();
    for (const auto& [mono, c] : f.terms)
        terms.push_back(Json{{"monomial", Json{mono[0], mono[1], mono[2]}},
                             {"coeff", gaussian_to_json(c)}});
    return Json{{"m", f.m}, {"terms", terms}};
}

CubicForm cubic_form_from_json(const Json& j) {
    const Json& m = require(j, "m");
    if (!m.is_number_integer() || m.get<int>() < 1)
        throw parse_error("cubic form needs a positive variable count");
    CubicForm f(m.get<int>());
    const Json& terms = require(j, "terms");
    if (!terms.is_array()) throw parse_error("\"terms\" must be an array");
    for (const auto& term : terms) {
        const Json& mono = require(term, "monomial");
        if (!mono.is_array() || mono.size() != 3)
            throw parse_error("cubic monomial must list three variable indices");
        try {
            f.add(cubic_monomial(mono[0].get<int>(), mono[1].get<int>(), mono[2].get<int>()),
                  gaussian_from_json(require(term, "coeff")));
        } catch (const invalid_input& e) {
            throw parse_error(e.what());
        }
    }
    return f;
}

std::size_t CertificateFile::term_count() const {
    return std::visit([](const auto& c) { return c.size(); }, certificate);
}

Json certificate_file_to_json(const CertificateFile& c) {
    Json terms = Json::array();
    if (c.is_border()) {
        for (const auto& t : std::get<EpsilonFamily>(c.certificate).terms) {
            Json form = Json::array();
            for (const auto& entry : t.form) form.push_back(laurent_to_json(entry));
            terms.push_back(Json{{"coeff", laurent_to_json(t.coeff)}, {"form", form}});
        }
    } else {
        for (const auto& t : std::get<WaringCertificate>(c.certificate).terms) {
            Json form = Json::array();
            for (const auto& entry : t.form) form.push_back(gaussian_to_json(entry));
            terms.push_back(Json{{"coeff", gaussian_to_json(t.coeff)}, {"form", form}});
        }
    }
    return Json{{"target", cubic_form_to_json(c.target)},
                {"kind", c.is_border() ? "border" : "rank"},
                {"terms", terms}};
}

CertificateFile certificate_file_from_json(const Json& j) {
    CertificateFile out{cubic_form_from_json(require(j, "target")), WaringCertificate{}};
    const Json& kind = require(j, "kind");
    const Json& terms = require(j, "terms");
    if (!terms.is_array()) throw parse_error("\"terms\" must be an array");
    if (kind == "rank") {
        WaringCertificate cert;
        cert.m = out.target.m;
        for (const auto& t : terms) {
            WaringCertificate::Term term;
            term.coeff = gaussian_from_json(require(t, "coeff"));
            for (const auto& e : require(t, "form")) term.form.push_back(gaussian_from_json(e));
            if (static_cast<int>(term.form.size()) != cert.m)
                throw parse_error("certificate form length disagrees with the target");
            cert.terms.push_back(std::move(term));
        }
        out.certificate = std::move(cert);
    } else if (kind == "border") {
        EpsilonFamily fam;
        fam.m = out.target.m;
        for (const auto& t : terms) {
            EpsilonFamily::Term term;
            term.coeff = laurent_from_json(require(t, "coeff"));
            for (const auto& e : require(t, "form")) term.form.push_back(laurent_from_json(e));
            if (static_cast<int>(term.form.size()) != fam.m)
                throw parse_error("family form length disagrees with the target");
            fam.terms.push_back(std::move(term));
        }
        out.certificate = std::move(fam);
    } else {
        throw parse_error("certificate kind must be \"rank\" or \"border\"");
    }
    return out;
}

Json parse_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("malformed JSON");
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str());
}

Json decomposition_to_json(const AnnotatedDecomposition& d) {
    Json comps = Json::array();
    for (const auto& c : d.components) {
        Json entry{{"gl_weight", weight_to_json(c.gl_weight)},
                   {"sl_weight", c.sl_wt},
                   {"template", c.pattern ? template_to_json(*c.pattern) : Json(nullptr)},
                   {"multiplicity", c.multiplicity},
                   {"dimension", c.dimension.str()},
                   {"variety_dim", c.variety_dimension}};
        comps.push_back(std::move(entry));
    }
    return Json{{"algebra", algebra_name(d.algebra)},
                {"k", d.k},
                {"n", d.n},
                {"total_dim", d.total.str()},
                {"components", comps}};
}

std::variant<GLWeight, WeightTemplate> parse_weight_or_template(const std::string& text,
                                                                int n) {
    std::string s = text;
    std::erase(s, ' ');
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw invalid_input("expected a bracketed list like [1,0*,-1]");
    s = s.substr(1, s.size() - 2);

    bool is_template = false;
    std::vector<long> before, after;
    bool after_star = false;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string item = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        pos = comma == std::string::npos ? s.size() : comma + 1;
        if (item == "0*") {
            if (is_template) throw invalid_input("only one 0* block is allowed");
            is_template = true;
            after_star = true;
            continue;
        }
        try {
            long v = std::stol(item);
            (after_star ? after : before).push_back(v);
        } catch (const std::exception&) {
            throw invalid_input("bad weight entry \"" + item + "\"");
        }
    }
    if (is_template) return WeightTemplate(std::move(before), std::move(after));
    if (static_cast<int>(before.size()) != n)
        throw invalid_input("weight has " + std::to_string(before.size()) +
                            " entries but n = " + std::to_string(n));
    return GLWeight(n, std::move(before));
}

} // namespace symcube
