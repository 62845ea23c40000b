// Regenerates the bundled certificate files. Usage: gen_certs <out_dir>
// Every certificate is re-verified before it is written.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "symcube/io.hpp"
#include "symcube/waring.hpp"

using namespace symcube;

namespace {

std::vector<Gaussian> unit(int m, int v) {
    std::vector<Gaussian> e(static_cast<std::size_t>(m), Gaussian(0));
    e[static_cast<std::size_t>(v)] = Gaussian(1);
    return e;
}

void write_file(const std::filesystem::path& path, const CertificateFile& cf) {
    if (cf.is_border()) {
        if (!verify_border_certificate(cf.target,
                                       std::get<EpsilonFamily>(cf.certificate)))
            throw internal_error("border certificate does not verify: " +
                                 path.string());
    } else {
        if (!verify_waring_certificate(
                cf.target, std::get<WaringCertificate>(cf.certificate)))
            throw internal_error("rank certificate does not verify: " +
                                 path.string());
    }
    std::ofstream out(path);
    out << certificate_file_to_json(cf).dump(2) << "\n";
    if (!out) throw internal_error("cannot write " + path.string());
    std::cout << path.string() << ": " << cf.term_count() << " terms\n";
}

CubicForm single_monomial(int m, const CubicMonomial& mono) {
    CubicForm f(m);
    f.add(mono, Gaussian(1));
    return f;
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: gen_certs <out_dir>\n";
        return 2;
    }
    std::filesystem::path dir(argv[1]);
    std::filesystem::create_directories(dir);

    try {
        // Single monomials: the three expansion identities.
        write_file(dir / "x3_rank.json",
                   {single_monomial(1, cubic_monomial(0, 0, 0)),
                    monomial_certificate(1, cubic_monomial(0, 0, 0))});
        write_file(dir / "x2y_rank.json",
                   {single_monomial(2, cubic_monomial(0, 0, 1)),
                    monomial_certificate(2, cubic_monomial(0, 0, 1))});
        write_file(dir / "xyz_rank.json",
                   {single_monomial(3, cubic_monomial(0, 1, 2)),
                    monomial_certificate(3, cubic_monomial(0, 1, 2))});

        // f1 = xyz - xwt: per-product certificates, 4 + 4 terms.
        {
            WaringCertificate c;
            c.m = 5;
            for (auto& t : product_certificate(
                     Gaussian(1), {unit(5, 0), unit(5, 1), unit(5, 2)}))
                c.terms.push_back(t);
            for (auto& t : product_certificate(
                     Gaussian(-1), {unit(5, 0), unit(5, 3), unit(5, 4)}))
                c.terms.push_back(t);
            write_file(dir / "f1_rank.json", {f1(), c});
        }

        // f2 = xzt - x^2 y: 4 + 3 terms.
        {
            WaringCertificate c;
            c.m = 4;
            for (auto& t : product_certificate(
                     Gaussian(1), {unit(4, 0), unit(4, 2), unit(4, 3)}))
                c.terms.push_back(t);
            for (auto& t : product_certificate(
                     Gaussian(-1), {unit(4, 0), unit(4, 0), unit(4, 1)}))
                c.terms.push_back(t);
            write_file(dir / "f2_rank.json", {f2(), c});
        }

        // Border families.
        write_file(dir / "x2y_border.json",
                   {single_monomial(2, cubic_monomial(0, 0, 1)),
                    x2y_border_family()});
        write_file(dir / "f2_border.json", {f2(), f2_border_family()});

        // A deliberately broken copy of the x^2 y certificate, for the
        // failure path: one cube coefficient is off by 1. Written without
        // the verification gate.
        {
            WaringCertificate c = monomial_certificate(2, cubic_monomial(0, 0, 1));
            c.terms.front().coeff += Gaussian(1);
            CertificateFile cf{single_monomial(2, cubic_monomial(0, 0, 1)), c};
            std::ofstream out(dir / "tampered_x2y_rank.json");
            out << certificate_file_to_json(cf).dump(2) << "\n";
            std::cout << (dir / "tampered_x2y_rank.json").string()
                      << ": intentionally invalid\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "gen_certs failed: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
