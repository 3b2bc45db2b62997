#include "heckemu/pointparse.hpp"

#include <algorithm>
#include <cctype>

namespace heckemu {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational");
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '/' && ch != '-')
            throw parse_error("bad rational '" + s + "'");
    try {
        Rational r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational '" + s + "'");
    }
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    bool eof() const { return i >= s.size(); }
    char peek() const { return eof() ? '\0' : s[i]; }
    char next() { return s[i++]; }
    void expect(char c) {
        if (eof() || s[i] != c) throw parse_error(std::string("expected '") + c + "' in point");
        ++i;
    }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
};

long parse_int(Cursor& c) {
    c.skip_ws();
    std::string tok;
    if (c.peek() == '-' || c.peek() == '+') tok += c.next();
    while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) tok += c.next();
    if (tok.empty() || tok == "-" || tok == "+") throw parse_error("expected integer");
    return std::stol(tok);
}

Rational parse_exponent(Cursor& c) {  // rational, for q-powers
    c.skip_ws();
    std::string tok;
    if (c.peek() == '-' || c.peek() == '+') tok += c.next();
    while (!c.eof() && (std::isdigit(static_cast<unsigned char>(c.peek())) || c.peek() == '/')) tok += c.next();
    return parse_rational(tok);
}

Monomial parse_coord(Cursor& c) {
    c.skip_ws();
    Monomial m;
    if (c.peek() == '-') {
        c.next();
        m = m.negated();
    }
    c.skip_ws();
    bool any = false;
    while (true) {
        c.skip_ws();
        char ch = c.peek();
        if (ch == 't') {
            c.next();
            std::string ord;
            while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) ord += c.next();
            if (ord.empty()) throw parse_error("unit root needs an order, e.g. t3");
            long order = std::stol(ord);
            long power = 1;
            if (c.peek() == '^') {
                c.next();
                power = parse_int(c);
            }
            if (order <= 0 || long(zeta_order()) % order != 0)
                throw parse_error("unit root order must divide the session zeta order");
            m.zeta = Monomial::norm_zeta(m.zeta + (long(zeta_order()) / order) * power);
            any = true;
        } else if (ch == 'z') {  // z^a = the session root zeta_N^a
            c.next();
            long power = 1;
            if (c.peek() == '^') {
                c.next();
                power = parse_int(c);
            }
            m.zeta = Monomial::norm_zeta(m.zeta + power);
            any = true;
        } else if (ch == 'q') {
            c.next();
            Rational e = 1;
            if (c.peek() == '^') {
                c.next();
                e = parse_exponent(c);
            }
            m *= Monomial::q_power(e);
            any = true;
        } else if (ch == 'v') {
            c.next();
            long e = 1;
            if (c.peek() == '^') {
                c.next();
                e = parse_int(c);
            }
            m.vexp += e;
            any = true;
        } else if (ch == '1' && !any) {
            c.next();
            any = true;
        } else {
            break;
        }
        c.skip_ws();
        if (c.peek() == '*') {
            c.next();
            continue;
        }
        break;
    }
    if (!any) throw parse_error("empty coordinate");
    return m;
}

}  // namespace

TorusPoint parse_point(const std::string& s) {
    Cursor c{s};
    c.skip_ws();
    c.expect('(');
    TorusPoint p;
    while (true) {
        p.coords.push_back(parse_coord(c));
        c.skip_ws();
        if (c.peek() == ',') {
            c.next();
            continue;
        }
        break;
    }
    c.expect(')');
    c.skip_ws();
    if (!c.eof()) throw parse_error("trailing input after point");
    return p;
}

TorusPoint point_from_paper(const RootSystemSpec& spec, const TorusPoint& paper) {
    TorusPoint p = paper;
    if (spec.family == RootFamily::G2) std::reverse(p.coords.begin(), p.coords.end());
    return p;
}

}  // namespace heckemu
