#include "symcube/reports.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <future>
#include <sstream>
#include <thread>

#include "symcube/dims.hpp"
#include "symcube/errors.hpp"
#include "symcube/glcube.hpp"
#include "symcube/lr.hpp"
#include "symcube/schur.hpp"
#include "symcube/waring.hpp"

namespace symcube {

namespace {

template <class F>
Report timed(const std::string& command, F&& fill) {
    Report rep;
    rep.command = command;
    auto t0 = std::chrono::steady_clock::now();
    fill(rep);
    auto t1 = std::chrono::steady_clock::now();
    rep.elapsed_us =
        std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
    rep.body["command"] = command;
    rep.body["pass"] = rep.pass;
    return rep;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

} // namespace

std::string Report::render(const std::string& format, bool with_timing) const {
    if (format == "json") {
        Json out = body;
        if (with_timing) out["elapsed_us"] = elapsed_us;
        return out.dump(2) + "\n";
    }
    if (format == "markdown") {
        std::string s = markdown;
        if (with_timing)
            s += "\nelapsed_us: " + std::to_string(elapsed_us) + "\n";
        return s;
    }
    if (format == "csv") {
        if (csv.empty())
            throw invalid_input("no csv rendering for '" + command + "'");
        return csv;
    }
    throw invalid_input("unknown format '" + format +
                        "' (expected json, markdown, or csv)");
}

int worker_count() {
    if (const char* env = std::getenv("SYMCUBE_WORKERS")) {
        try {
            if (int v = std::stoi(env); v >= 1) return v;
        } catch (const std::exception&) {
        }
        throw invalid_input("SYMCUBE_WORKERS must be a positive integer");
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

Partition parse_partition_text(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw invalid_input("partition must look like [3,1]: got '" + text + "'");
    s = s.substr(1, s.size() - 2);
    std::vector<long> parts;
    if (!s.empty()) {
        std::istringstream in(s);
        std::string item;
        while (std::getline(in, item, ',')) {
            std::size_t used = 0;
            long v = 0;
            try {
                v = std::stol(item, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != item.size() || item.empty())
                throw invalid_input("bad partition entry '" + item + "' in '" +
                                    text + "'");
            parts.push_back(v);
        }
        if (s.back() == ',')
            throw invalid_input("trailing comma in partition '" + text + "'");
    }
    return Partition(std::move(parts));
}

Report run_decompose(int k, int n, Algebra algebra) {
    return timed("decompose", [&](Report& rep) {
        if (k < 1) throw invalid_input("k must be >= 1");
        if (n < 2) throw invalid_input("n must be >= 2");

        Decomposition dg = decompose_gl(k, n);
        Decomposition ds = decompose_sl(k, n);
        AnnotatedDecomposition ag = annotate(dg);
        AnnotatedDecomposition requested =
            (algebra == Algebra::gl) ? ag : annotate(ds);
        rep.body = decomposition_to_json(requested);

        std::string head_gl = "S^" + std::to_string(k) + "(gl_" + std::to_string(n) + ")";
        std::string head_sl = "S^" + std::to_string(k) + "(sl_" + std::to_string(n) + ")";
        std::string title = (algebra == Algebra::gl) ? head_gl : head_sl;

        std::ostringstream md;
        md << "# decompose " << title << "\n\n";
        md << "total dimension: " << requested.total.str() << "\n\n";
        md << "| weight | " << head_gl << " | " << head_sl
           << " | dimension | variety dim |\n";
        md << "|---|---:|---:|---:|---:|\n";

        std::ostringstream cs;
        cs << "weight,gl_multiplicity,sl_multiplicity,dimension,variety_dim\n";

        for (const AnnotatedComponent& c : ag.components) {
            std::string wcell =
                c.pattern ? c.pattern->to_string() : c.gl_weight.to_string();
            long sl_mult = 0;
            if (auto it = ds.components.find(c.gl_weight); it != ds.components.end())
                sl_mult = it->second;
            md << "| " << wcell << " | " << c.multiplicity << " | " << sl_mult
               << " | " << c.dimension.str() << " | " << c.variety_dimension
               << " |\n";
            cs << csv_quote(wcell) << "," << c.multiplicity << "," << sl_mult
               << "," << c.dimension.str() << "," << c.variety_dimension << "\n";
        }
        rep.markdown = md.str();
        rep.csv = cs.str();
        rep.pass = true;
    });
}

Report run_verify_hwv(int n, const std::vector<int>& rows) {
    return timed("verify-hwv", [&](Report& rep) {
        if (n < 2) throw invalid_input("n must be >= 2");
        std::vector<int> ids = rows;
        if (ids.empty())
            for (int id = 1; id <= catalog_size(); ++id) ids.push_back(id);

        std::string too_small;
        for (int id : ids) {
            const CatalogRow& row = catalog_row(id);  // validates the id
            if (n < row.min_n) {
                if (!too_small.empty()) too_small += "; ";
                too_small += "row " + std::to_string(id) + " requires n >= " +
                             std::to_string(row.min_n);
            }
        }
        if (!too_small.empty()) throw invalid_input(too_small);

        struct RowResult {
            Json j;
            bool hw = false;
            std::string weight_str;
        };
        std::vector<RowResult> results(ids.size());

        auto task = [&](std::size_t idx) {
            int id = ids[idx];
            GlCubePolynomial p = catalog_vector(id, n);
            auto w = weight_of(p);
            if (!w)
                throw internal_error("catalog row " + std::to_string(id) +
                                     " is not weight-homogeneous");
            GLWeight expected = instantiate(catalog_row(id).weight, n);
            if (*w != expected)
                throw internal_error("catalog row " + std::to_string(id) +
                                     " has weight " + w->to_string() +
                                     ", catalog says " + expected.to_string());
            bool hw = is_highest_weight(p);
            RowResult r;
            r.j = Json{{"row", id},
                       {"weight", w->entries},
                       {"is_hwv", hw},
                       {"n", n}};
            r.hw = hw;
            r.weight_str = w->to_string();
            results[idx] = std::move(r);
        };

        int workers = std::min<int>(worker_count(), static_cast<int>(ids.size()));
        if (workers <= 1) {
            for (std::size_t i = 0; i < ids.size(); ++i) task(i);
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::future<void>> futs;
            futs.reserve(static_cast<std::size_t>(workers));
            for (int w = 0; w < workers; ++w)
                futs.push_back(std::async(std::launch::async, [&] {
                    for (std::size_t i = next.fetch_add(1); i < ids.size();
                         i = next.fetch_add(1))
                        task(i);
                }));
            for (auto& f : futs) f.get();
        }

        bool all = true;
        Json arr = Json::array();
        std::ostringstream md;
        md << "# verify-hwv (n = " << n << ")\n\n";
        md << "| row | formula | weight | highest weight |\n";
        md << "|---:|---|---|---|\n";
        for (std::size_t i = 0; i < ids.size(); ++i) {
            const RowResult& r = results[i];
            all = all && r.hw;
            arr.push_back(r.j);
            md << "| " << ids[i] << " | " << catalog_row(ids[i]).display << " | "
               << r.weight_str << " | " << yes_no(r.hw) << " |\n";
        }
        md << "\nall rows are highest-weight vectors: " << yes_no(all) << "\n";

        rep.body["n"] = n;
        rep.body["rows"] = arr;
        rep.markdown = md.str();
        rep.pass = all;
    });
}

Report run_multiplicity(int n, const std::string& weight_or_template) {
    return timed("multiplicity", [&](Report& rep) {
        if (n < 2) throw invalid_input("n must be >= 2");
        auto parsed = parse_weight_or_template(weight_or_template, n);

        GLWeight w;
        std::optional<WeightTemplate> tpl;
        if (std::holds_alternative<WeightTemplate>(parsed)) {
            tpl = std::get<WeightTemplate>(parsed);
            w = instantiate(*tpl, n);
        } else {
            w = std::get<GLWeight>(parsed);
            if (!w.is_dominant())
                throw invalid_input("weight must be dominant: " + w.to_string());
            if (!w.is_zero_sum())
                throw invalid_input("weight must sum to zero: " + w.to_string());
            tpl = match_template(w);
        }

        long kdim = hwv_space_dim(n, w);
        Decomposition d = decompose_gl(3, n);
        long mult = 0;
        if (auto it = d.components.find(w); it != d.components.end())
            mult = it->second;
        bool match = (kdim == mult);

        rep.body["n"] = n;
        rep.body["weight"] = weight_to_json(w);
        rep.body["template"] = tpl ? template_to_json(*tpl) : Json();
        rep.body["hwv_space_dim"] = kdim;
        rep.body["plethysm_multiplicity"] = mult;
        rep.body["match"] = match;

        std::ostringstream md;
        md << "# multiplicity (n = " << n << ")\n\n";
        md << "weight: " << w.to_string();
        if (tpl) md << "  (pattern " << tpl->to_string() << ")";
        md << "\n";
        md << "hwv space dimension: " << kdim << "\n";
        md << "plethysm multiplicity: " << mult << "\n";
        md << "match: " << yes_no(match) << "\n";
        rep.markdown = md.str();
        rep.pass = match;
    });
}

namespace {

Report verify_certificate_impl(const Json& doc, const std::string& label) {
    return timed("verify-certificate", [&](Report& rep) {
        CertificateFile cf = certificate_file_from_json(doc);
        long catal = catalecticant_rank(cf.target);
        std::size_t terms = cf.term_count();

        std::string kind;
        std::optional<CertificateMismatch> mm;
        if (cf.is_border()) {
            kind = "border";
            mm = border_certificate_mismatch(cf.target,
                                             std::get<EpsilonFamily>(cf.certificate));
        } else {
            kind = "rank";
            mm = waring_certificate_mismatch(
                cf.target, std::get<WaringCertificate>(cf.certificate));
        }
        bool ok = !mm.has_value();
        std::string bound = (kind == "rank" ? "rank <= " : "border rank <= ") +
                            std::to_string(terms);

        rep.body["file"] = label;
        rep.body["kind"] = kind;
        rep.body["target"] = cubic_form_to_json(cf.target);
        rep.body["terms"] = terms;
        rep.body["catalecticant_lower_bound"] = catal;
        rep.body["certified_bound"] = ok ? Json(bound) : Json();
        rep.body["mismatch"] =
            ok ? Json()
               : Json{{"where", mm->where},
                      {"expected", mm->expected},
                      {"actual", mm->actual}};

        std::ostringstream md;
        md << "# verify-certificate " << label << "\n\n";
        md << "target: " << cf.target.to_string() << "\n";
        md << "kind: " << kind << ", terms: " << terms << "\n";
        md << "catalecticant lower bound: " << catal << "\n";
        if (ok) {
            md << "verified: " << bound << "\n";
            if (kind == "rank" && cf.target == f1() && terms < 9) {
                std::string note =
                    "a published value for the Waring rank of this form is 9; "
                    "this certificate verifies an upper bound of " +
                    std::to_string(terms) +
                    ". The discrepancy is recorded here, not adjudicated.";
                rep.body["note"] = note;
                md << "note: " << note << "\n";
            }
        } else {
            md << "FAILED: first difference at " << mm->where << ": expected "
               << mm->expected << ", got " << mm->actual << "\n";
        }
        rep.markdown = md.str();
        rep.pass = ok;
    });
}

} // namespace

Report run_verify_certificate(const std::string& path) {
    return verify_certificate_impl(load_json_file(path), path);
}

Report run_verify_certificate_text(const std::string& json_text) {
    return verify_certificate_impl(parse_json_text(json_text), "<memory>");
}

Report run_lr(const std::string& lambda_text, const std::string& mu_text,
              int max_length, bool use_oracle) {
    return timed("lr", [&](Report& rep) {
        Partition lambda = parse_partition_text(lambda_text);
        Partition mu = parse_partition_text(mu_text);
        if (max_length < 1) throw invalid_input("max length must be >= 1");

        auto expansion = lr_expand(lambda, mu, max_length);

        bool agrees = true;
        if (use_oracle) {
            if (max_length > SymmetricPolynomial::kMaxVars)
                throw invalid_input("the oracle supports at most 8 variables");
            auto oracle = schur_product_oracle(lambda, mu, max_length);
            agrees = (oracle == expansion);
        }

        Json arr = Json::array();
        std::ostringstream md, cs;
        md << "# s" << lambda.to_string() << " * s" << mu.to_string()
           << " (length <= " << max_length << ")\n\n";
        md << "| nu | multiplicity |\n|---|---:|\n";
        cs << "nu,multiplicity\n";
        for (const auto& [nu, c] : expansion) {
            arr.push_back(Json{{"nu", partition_to_json(nu)}, {"multiplicity", c}});
            md << "| " << nu.to_string() << " | " << c << " |\n";
            cs << csv_quote(nu.to_string()) << "," << c << "\n";
        }
        if (use_oracle) md << "\noracle agrees: " << yes_no(agrees) << "\n";

        rep.body["lambda"] = partition_to_json(lambda);
        rep.body["mu"] = partition_to_json(mu);
        rep.body["max_length"] = max_length;
        rep.body["terms"] = arr;
        rep.body["oracle_checked"] = use_oracle;
        rep.body["oracle_agrees"] = use_oracle ? Json(agrees) : Json();
        rep.markdown = md.str();
        rep.csv = cs.str();
        rep.pass = agrees;
    });
}

} // namespace symcube
