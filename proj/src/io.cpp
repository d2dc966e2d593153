#include "nrk/io.hpp"

#include <cctype>

#include "nrk/errors.hpp"

namespace nrk::io {

mpq_class parse_rational(const json& j, const std::string& key)
{
    if (j.is_number_integer())
        return mpq_class(mpz_class(j.dump()));
    if (!j.is_string())
        throw format_error("key '" + key + "': expected an integer or a rational string");
    std::string s = j.get<std::string>();
    mpq_class q;
    if (s.empty() || s.find_first_not_of("+-0123456789/") != std::string::npos || q.set_str(s, 10) != 0 ||
        q.get_den() == 0)
        throw format_error("key '" + key + "': invalid rational '" + s + "'");
    q.canonicalize();
    return q;
}

mpz_class parse_integer(const json& j, const std::string& key)
{
    mpq_class q = parse_rational(j, key);
    if (q.get_den() != 1)
        throw format_error("key '" + key + "': expected an integer");
    return q.get_num();
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

QMatrix parse_rational_matrix(const json& j, const std::string& key, size_t cols)
{
    if (!j.is_array())
        throw format_error("key '" + key + "': expected an array of rows");
    QMatrix m(0, cols);
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != cols)
            throw format_error("key '" + key + "': every row needs " + std::to_string(cols) + " entries");
        std::vector<mpq_class> r;
        for (const auto& x : row)
            r.push_back(parse_rational(x, key));
        m.append_row(r);
    }
    return m;
}

NumberField parse_field(const json& j)
{
    if (!j.is_object())
        throw format_error("key 'field': expected an object");
    if (!j.contains("poly"))
        throw format_error("key 'field.poly': missing");
    const json& p = j.at("poly");
    if (!p.is_array() || p.empty())
        throw format_error("key 'field.poly': expected a non-empty integer array");
    std::vector<mpz_class> poly;
    for (const auto& c : p)
        poly.push_back(parse_integer(c, "field.poly"));
    std::optional<QMatrix> basis;
    if (j.contains("integral_basis") && !j.at("integral_basis").is_null())
        basis = parse_rational_matrix(j.at("integral_basis"), "field.integral_basis", poly.size() - 1);
    bool maximal = true;
    if (j.contains("maximal")) {
        if (!j.at("maximal").is_boolean())
            throw format_error("key 'field.maximal': expected a boolean");
        maximal = j.at("maximal").get<bool>();
    }
    for (const auto& [k, v] : j.items())
        if (k != "poly" && k != "integral_basis" && k != "maximal")
            throw format_error("key 'field." + k + "': unknown");
    return NumberField::create(std::move(poly), std::move(basis), maximal);
}

json field_record(const NumberField& k)
{
    json poly = json::array();
    for (const auto& c : k.defining_poly())
        poly.push_back(c.get_str());
    json basis = json::array();
    const QMatrix& b = k.integral_basis();
    for (size_t i = 0; i < b.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < b.cols(); ++j)
            row.push_back(to_string(b(i, j)));
        basis.push_back(row);
    }
    return json{{"poly", poly}, {"integral_basis", basis}, {"maximal", k.maximality_asserted()}};
}

namespace {

/* recursive descent:
 *   expr   := term (('+'|'-') term)*
 *   term   := unary (('*'|'/') unary)*
 *   unary  := ('-'|'+') unary | power
 *   power  := atom ('^' signed-int)?
 *   atom   := number | 'x' | '(' expr ')'
 * juxtaposition such as 2x is read as 2*x */
class Parser {
  public:
    Parser(const NumberField& k, std::string s) : k_(k), s_(std::move(s)) {}

    FieldElement run()
    {
        FieldElement v = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw format_error("element '" + s_ + "': " + what + " at offset " + std::to_string(pos_));
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    char peek()
    {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    FieldElement expr()
    {
        FieldElement v = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                v = v + term();
            } else if (c == '-') {
                ++pos_;
                v = v - term();
            } else {
                return v;
            }
        }
    }

    FieldElement term()
    {
        FieldElement v = unary();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                v = v * unary();
            } else if (c == '/') {
                ++pos_;
                FieldElement d = unary();
                if (d.is_zero())
                    throw arithmetic_error("element '" + s_ + "': division by zero");
                v = v / d;
            } else if (c == '(' || c == 'x' || std::isdigit(static_cast<unsigned char>(c))) {
                v = v * power();
            } else {
                return v;
            }
        }
    }

    FieldElement unary()
    {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    FieldElement power()
    {
        FieldElement base = atom();
        if (peek() != '^')
            return base;
        ++pos_;
        skip();
        size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+'))
            ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        std::string e = s_.substr(start, pos_ - start);
        if (e.empty() || e == "-" || e == "+")
            fail("expected an integer exponent");
        mpz_class ez(e[0] == '+' ? e.substr(1) : e);
        if (!ez.fits_slong_p() || abs(ez) > 100000)
            fail("exponent too large");
        if (ez < 0 && base.is_zero())
            throw arithmetic_error("element '" + s_ + "': zero to a negative power");
        return base.pow(ez.get_si());
    }

    FieldElement atom()
    {
        char c = peek();
        if (c == '(') {
            ++pos_;
            FieldElement v = expr();
            if (peek() != ')')
                fail("expected ')'");
            ++pos_;
            return v;
        }
        if (c == 'x') {
            ++pos_;
            return k_.generator();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            mpz_class whole(s_.substr(start, pos_ - start));
            mpq_class q(whole);
            /* decimal fraction is exact */
            if (pos_ < s_.size() && s_[pos_] == '.') {
                ++pos_;
                size_t fs = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    ++pos_;
                std::string frac = s_.substr(fs, pos_ - fs);
                if (!frac.empty()) {
                    mpz_class den;
                    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
                    q += mpq_class(mpz_class(frac), den);
                    q.canonicalize();
                }
            }
            return k_.rational(q);
        }
        fail(c == '\0' ? "unexpected end" : "unexpected '" + std::string(1, c) + "'");
    }

    const NumberField& k_;
    std::string s_;
    size_t pos_ = 0;
};

}  // namespace

FieldElement parse_expression(const NumberField& k, const std::string& text) { return Parser(k, text).run(); }

FieldElement parse_element(const NumberField& k, const json& j, const std::string& key)
{
    const json* coeffs = nullptr;
    if (j.is_string()) {
        try {
            return parse_expression(k, j.get<std::string>());
        } catch (const format_error& e) {
            throw format_error("key '" + key + "': " + e.what());
        }
    }
    if (j.is_array())
        coeffs = &j;
    else if (j.is_object() && j.contains("coeffs"))
        coeffs = &j.at("coeffs");
    else if (j.is_number_integer())
        return k.rational(parse_rational(j, key));
    if (!coeffs || !coeffs->is_array() || coeffs->size() > static_cast<size_t>(k.degree()))
        throw format_error("key '" + key + "': expected an expression, a coefficient array or {\"coeffs\": [...]}");
    std::vector<mpq_class> c;
    for (const auto& x : *coeffs)
        c.push_back(parse_rational(x, key));
    return k.element(std::move(c));
}

json element_record(const FieldElement& a)
{
    json c = json::array();
    for (const auto& q : a.coeffs())
        c.push_back(to_string(q));
    return json{{"coeffs", c}};
}

BlochElement parse_bloch_element(const NumberField& k, const json& j)
{
    if (!j.is_object() || !j.contains("support") || !j.contains("multiplicities"))
        throw format_error("key 'element': expected {\"support\": [...], \"multiplicities\": [...]}");
    const json& s = j.at("support");
    const json& m = j.at("multiplicities");
    if (!s.is_array() || !m.is_array() || s.size() != m.size())
        throw format_error("key 'element.multiplicities': length must match 'element.support'");
    BlochElement x;
    for (size_t i = 0; i < s.size(); ++i) {
        x.support.push_back(parse_element(k, s[i], "element.support"));
        x.multiplicities.push_back(parse_integer(m[i], "element.multiplicities"));
    }
    return x;
}

std::string format(const Real& x, int digits) { return x.to_string(digits); }

}  // namespace nrk::io
