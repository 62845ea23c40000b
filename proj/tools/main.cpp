// symcube CLI: thin shell over the shared library's C interface.
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symcube.h"

namespace {

// 0 pass, 1 failed check, 2 usage or parse error.
int code_to_exit(int rc) {
    switch (rc) {
        case SC_OK:
            return 0;
        case SC_EINVAL:
        case SC_EPARSE:
        case SC_EEXCLUDED:
            return 2;
        default:
            return 1;
    }
}

int finish(sc_report* rep, const std::string& format, bool with_timing) {
    char* text = nullptr;
    int rc = sc_report_render(rep, format.c_str(), with_timing ? 1 : 0, &text);
    if (rc != SC_OK) {
        std::fprintf(stderr, "error: %s\n", sc_last_error());
        sc_report_free(rep);
        return code_to_exit(rc);
    }
    std::fputs(text, stdout);
    sc_string_free(text);
    int passed = sc_report_passed(rep);
    sc_report_free(rep);
    return passed ? 0 : 1;
}

int run(int rc, sc_report* rep, const std::string& format, bool with_timing) {
    if (rc != SC_OK) {
        std::fprintf(stderr, "error: %s\n", sc_last_error());
        return code_to_exit(rc);
    }
    return finish(rep, format, with_timing);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact decompositions of symmetric cubes and Waring-rank "
                 "certificates"};
    app.require_subcommand(1);

    std::string format = "json";
    bool no_timing = false;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "markdown", "csv"}))
            ->capture_default_str();
        cmd->add_flag("--no-timing", no_timing,
                      "omit the timing field for byte-identical output");
    };

    int k = 3, n = 0, max_length = 8;
    std::string algebra = "gl", weight, cert_path, lambda, mu;
    std::vector<int> rows;
    bool oracle = false;

    CLI::App* dec = app.add_subcommand(
        "decompose", "decompose S^k(gl_n) or S^k(sl_n) into irreducibles");
    dec->add_option("-k,--degree", k, "symmetric power")->required();
    dec->add_option("-n,--rank", n, "matrix size n")->required();
    dec->add_option("--algebra", algebra, "gl or sl")
        ->check(CLI::IsMember({"gl", "sl"}))
        ->capture_default_str();
    add_common(dec);

    CLI::App* vh = app.add_subcommand(
        "verify-hwv", "check the built-in highest-weight vectors");
    vh->add_option("-n,--rank", n, "matrix size n")->required();
    vh->add_option("--rows", rows, "catalog rows (default: all)")
        ->delimiter(',');
    add_common(vh);

    CLI::App* mult = app.add_subcommand(
        "multiplicity",
        "kernel dimension of the raising operators vs plethysm multiplicity");
    mult->add_option("-n,--rank", n, "matrix size n")->required();
    mult->add_option("--template,--weight", weight,
                     "weight or template, e.g. \"[2,1,0*,-1,-2]\"")
        ->required();
    add_common(mult);

    CLI::App* vc = app.add_subcommand("verify-certificate",
                                      "check a rank/border-rank certificate");
    vc->add_option("file", cert_path, "certificate JSON file")->required();
    add_common(vc);

    CLI::App* lr = app.add_subcommand(
        "lr", "expand s_lambda * s_mu into Schur functions");
    lr->add_option("--lambda", lambda, "partition, e.g. \"[2,1]\"")->required();
    lr->add_option("--mu", mu, "partition")->required();
    lr->add_option("--max-length", max_length, "partition length bound")
        ->capture_default_str();
    lr->add_flag("--oracle", oracle,
                 "cross-check against the symmetric-polynomial oracle");
    add_common(lr);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    bool with_timing = !no_timing;
    sc_report* rep = nullptr;
    int rc = SC_EINVAL;

    if (dec->parsed())
        rc = sc_decompose(algebra.c_str(), k, n, &rep);
    else if (vh->parsed())
        rc = sc_verify_hwv(n, rows.empty() ? nullptr : rows.data(), rows.size(),
                           &rep);
    else if (mult->parsed())
        rc = sc_multiplicity(n, weight.c_str(), &rep);
    else if (vc->parsed())
        rc = sc_verify_certificate_file(cert_path.c_str(), &rep);
    else if (lr->parsed())
        rc = sc_lr_expand(lambda.c_str(), mu.c_str(), max_length,
                          oracle ? 1 : 0, &rep);

    return run(rc, rep, format, with_timing);
}
