#include "symcube/numeric.hpp"

#include <cctype>
#include <sstream>

namespace symcube {

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    Int q = num / den;
    if (q * den != num) throw internal_error("binomial: non-integral quotient");
    return q;
}

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

Rat rat_from_string(const std::string& s) {
    // accepted: optional sign, digits, optional "/digits"
    auto fail = [&] { throw parse_error("bad rational literal: \"" + s + "\""); };
    if (s.empty()) fail();
    // cpp_int rejects an explicit leading '+', so drop it up front
    const std::string t =
        (s.size() >= 2 && s[0] == '+' &&
         std::isdigit(static_cast<unsigned char>(s[1])))
            ? s.substr(1)
            : s;
    std::size_t pos = 0;
    if (t[pos] == '-') ++pos;
    if (pos == t.size() || !std::isdigit(static_cast<unsigned char>(t[pos]))) fail();
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    if (pos != t.size()) {
        if (t[pos] != '/') fail();
        ++pos;
        if (pos == t.size()) fail();
        std::size_t den_start = pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
        if (pos != t.size()) fail();
        Int den(t.substr(den_start));
        if (den == 0) fail();
        Int num(t.substr(0, den_start - 1));
        return Rat(num, den);
    }
    return Rat(Int(t));
}

std::string gaussian_to_string(const Gaussian& g) {
    if (g.im == 0) return rat_to_string(g.re);
    std::string im_part;
    if (g.im == 1) im_part = "i";
    else if (g.im == -1) im_part = "-i";
    else im_part = rat_to_string(g.im) + "i";
    if (g.re == 0) return im_part;
    if (g.im > 0 && im_part[0] != '-') return rat_to_string(g.re) + "+" + im_part;
    return rat_to_string(g.re) + im_part;  // im negative carries its own sign
}

Gaussian gaussian_from_string(const std::string& s) {
    // forms: "a", "bi", "a+bi", "a-bi" with a, b rationals; "i"/"-i" allowed
    if (s.empty()) throw parse_error("empty Gaussian literal");
    auto parse_imag = [](std::string t) -> Rat {
        if (t == "i" || t == "+i") return 1;
        if (t == "-i") return -1;
        if (t.empty() || t.back() != 'i') throw parse_error("bad imaginary part: \"" + t + "\"");
        return rat_from_string(t.substr(0, t.size() - 1));
    };
    // split at the last '+'/'-' that is not the leading sign and not inside "/..."
    // (rationals contain no signs after position 0, so any interior sign splits)
    std::size_t split = std::string::npos;
    for (std::size_t p = 1; p < s.size(); ++p)
        if (s[p] == '+' || s[p] == '-') split = p;
    if (s.back() == 'i') {
        if (split == std::string::npos || split == 0)
            return Gaussian(Rat(0), parse_imag(s));
        return Gaussian(rat_from_string(s.substr(0, split)), parse_imag(s.substr(split)));
    }
    return Gaussian(rat_from_string(s));
}

std::ostream& operator<<(std::ostream& os, const Gaussian& g) {
    return os << gaussian_to_string(g);
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [d, c] : o.coeffs_) {
        auto it = coeffs_.find(d);
        if (it == coeffs_.end()) {
            coeffs_.emplace(d, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [d, c] : o.coeffs_) {
        auto it = coeffs_.find(d);
        if (it == coeffs_.end()) {
            coeffs_.emplace(d, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [da, ca] : a.coeffs_)
        for (const auto& [db, cb] : b.coeffs_) {
            Gaussian prod = ca * cb;
            if (prod.is_zero()) continue;
            auto it = r.coeffs_.find(da + db);
            if (it == r.coeffs_.end()) {
                r.coeffs_.emplace(da + db, prod);
            } else {
                it->second += prod;
                if (it->second.is_zero()) r.coeffs_.erase(it);
            }
        }
    return r;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [d, c] : coeffs_) r.coeffs_.emplace(d, -c);
    return r;
}

std::string Laurent::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : coeffs_) {
        std::string cs = gaussian_to_string(c);
        bool wrapped = cs.find('+') != std::string::npos ||
                       cs.find('-', 1) != std::string::npos;
        if (!first) os << " + ";
        first = false;
        if (wrapped) cs = "(" + cs + ")";
        if (d == 0) {
            os << cs;
        } else {
            os << cs << "*e^" << d;
        }
    }
    return os.str();
}

Laurent Laurent::parse(const std::string& s) {
    // inverse of to_string: terms joined by " + ", each "coeff" or "coeff*e^d"
    Laurent r;
    if (s == "0") return r;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(" + ", pos);
        std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? s.size() : next + 3;
        int deg = 0;
        std::size_t star = term.rfind("*e^");
        std::string cs = term;
        if (star != std::string::npos) {
            deg = std::stoi(term.substr(star + 3));
            cs = term.substr(0, star);
        } else if (term.size() >= 2 &&
                   term.compare(term.size() - 2, 2, "*e") == 0) {
            deg = 1;  // "c*e" as shorthand for "c*e^1" in hand-written input
            cs = term.substr(0, term.size() - 2);
        }
        if (cs.size() >= 2 && cs.front() == '(' && cs.back() == ')')
            cs = cs.substr(1, cs.size() - 2);
        r += Laurent::monomial(deg, gaussian_from_string(cs));
    }
    return r;
}

} // namespace symcube
