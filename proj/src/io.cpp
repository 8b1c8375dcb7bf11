#include "bettikit/io.hpp"

#include "bettikit/errors.hpp"

#include <cctype>
#include <sstream>

namespace bettikit {

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    char get() {
        char c = text[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }
    void skip_spaces() {
        while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) get();
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, col, msg); }
    void expect(const std::string& word) {
        for (char c : word) {
            if (done() || peek() != c) fail("expected '" + word + "'");
            get();
        }
    }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string read_identifier(Cursor& in) {
    if (!ident_start(in.peek())) in.fail("expected an identifier");
    std::string s;
    while (!in.done() && ident_char(in.peek())) s += in.get();
    return s;
}

long long read_integer(Cursor& in) {
    bool neg = false;
    if (in.peek() == '-') {
        neg = true;
        in.get();
    }
    if (!std::isdigit(static_cast<unsigned char>(in.peek()))) in.fail("expected an integer");
    long long v = 0;
    while (!in.done() && std::isdigit(static_cast<unsigned char>(in.peek()))) {
        v = v * 10 + (in.get() - '0');
        if (v > (1LL << 62)) in.fail("integer literal too large");
    }
    return neg ? -v : v;
}

// term := [integer "*"]? factor ("*" factor)* ; factor := name ["^" integer]
Term read_term(Cursor& in, const RingPtr& ring) {
    long long coeff = 1;
    in.skip_spaces();
    if (std::isdigit(static_cast<unsigned char>(in.peek())) || in.peek() == '-') {
        coeff = read_integer(in);
        in.skip_spaces();
        if (in.peek() == '*') {
            in.get();
            in.skip_spaces();
        } else if (!ident_start(in.peek())) {
            // Bare constant term.
            std::vector<uint16_t> e(static_cast<size_t>(ring->num_vars), 0);
            return Term{Monomial(std::move(e)), FieldElement::from_integer(ring->field, coeff)};
        }
    }
    std::vector<uint16_t> exps(static_cast<size_t>(ring->num_vars), 0);
    bool any = false;
    while (true) {
        in.skip_spaces();
        if (!ident_start(in.peek())) {
            if (!any) in.fail("expected a variable");
            break;
        }
        int at_line = in.line, at_col = in.col;
        std::string name = read_identifier(in);
        int idx = ring->var_index(name);
        if (idx < 0) throw UnknownVariable(at_line, at_col, name);
        long long e = 1;
        in.skip_spaces();
        if (in.peek() == '^') {
            in.get();
            in.skip_spaces();
            e = read_integer(in);
            if (e < 0) in.fail("negative exponent");
        }
        long long total = exps[static_cast<size_t>(idx)] + e;
        if (total > 0xFFFF) in.fail("exponent overflow");
        exps[static_cast<size_t>(idx)] = static_cast<uint16_t>(total);
        any = true;
        in.skip_spaces();
        if (in.peek() == '*') {
            in.get();
            continue;
        }
        break;
    }
    return Term{Monomial(std::move(exps)), FieldElement::from_integer(ring->field, coeff)};
}

Polynomial read_polyline(Cursor& in, const RingPtr& ring) {
    std::vector<Term> terms;
    in.skip_spaces();
    bool negate = false;
    if (in.peek() == '-') {
        // Leading unary minus.
        negate = true;
        in.get();
    }
    while (true) {
        Term t = read_term(in, ring);
        if (negate) t.coeff = -t.coeff;
        terms.push_back(std::move(t));
        in.skip_spaces();
        if (in.peek() == '+') {
            negate = false;
            in.get();
        } else if (in.peek() == '-') {
            negate = true;
            in.get();
        } else {
            break;
        }
    }
    in.skip_spaces();
    if (!in.done() && in.peek() != '\n') in.fail("unexpected trailing characters");
    return Polynomial::from_terms(ring, std::move(terms));
}

} // namespace

Ideal parse_ideal(const std::string& text) {
    Cursor in{text};
    in.skip_spaces();
    in.expect("ring:");
    in.skip_spaces();
    in.expect("vars=");
    std::vector<std::string> names;
    names.push_back(read_identifier(in));
    while (in.peek() == ',') {
        in.get();
        names.push_back(read_identifier(in));
    }
    in.skip_spaces();
    in.expect("char=");
    int char_line = in.line, char_col = in.col;
    long long characteristic = read_integer(in);
    FieldSpec field;
    if (characteristic == 0) {
        field = FieldSpec::rationals();
    } else {
        try {
            field = FieldSpec::prime_field(characteristic);
        } catch (const BadCharacteristic& e) {
            throw ParseError(char_line, char_col, e.what());
        }
    }
    RingPtr ring;
    try {
        ring = make_ring(std::move(names), field);
    } catch (const std::invalid_argument& e) {
        throw ParseError(1, 1, e.what());
    }
    in.skip_spaces();
    if (in.peek() != '\n') in.fail("expected end of header line");
    in.get();
    in.skip_spaces();
    in.expect("gens:");
    in.skip_spaces();
    if (!in.done()) {
        if (in.peek() != '\n') in.fail("expected newline after gens:");
        in.get();
    }
    std::vector<Polynomial> gens;
    while (!in.done()) {
        in.skip_spaces();
        if (in.peek() == '\n') {
            in.get();
            continue;
        }
        if (in.done()) break;
        gens.push_back(read_polyline(in, ring));
        if (!in.done()) in.get(); // the newline
    }
    try {
        return Ideal(ring, std::move(gens));
    } catch (const std::invalid_argument& e) {
        throw ParseError(in.line, 1, e.what());
    }
}

std::string print_polynomial(const Polynomial& p) { return p.primitive().str(); }

std::string print_ideal(const Ideal& I) {
    std::ostringstream out;
    out << "ring: vars=";
    for (int i = 0; i < I.ring()->num_vars; ++i)
        out << (i ? "," : "") << I.ring()->var_names[static_cast<size_t>(i)];
    out << " char=" << I.ring()->field.characteristic << "\n";
    out << "gens:\n";
    for (const auto& g : I.generators()) out << print_polynomial(g) << "\n";
    return out.str();
}

FieldSpec parse_field_name(const std::string& name) {
    if (name == "qq" || name == "QQ") return FieldSpec::rationals();
    if (name.size() > 2 && (name.substr(0, 2) == "gf" || name.substr(0, 2) == "GF"))
        return FieldSpec::prime_field(std::atoll(name.c_str() + 2));
    throw BadCharacteristic("unknown field name '" + name + "' (use qq or gf<p>)");
}

nlohmann::json betti_table_json(const BettiTable& t) {
    nlohmann::json entries = nlohmann::json::object();
    for (const auto& [key, value] : t.entries)
        entries[std::to_string(key.first) + "," + std::to_string(key.second)] = value;
    nlohmann::json ring = {{"vars", t.ring->var_names}, {"char", t.ring->field.characteristic}};
    return {{"ring", ring}, {"entries", entries}, {"i_max", t.i_max}, {"j_max", t.j_max}};
}

std::string betti_table_text(const BettiTable& t) {
    std::ostringstream out;
    int min_offset = 0, max_offset = 0;
    for (const auto& [key, value] : t.entries)
        max_offset = std::max(max_offset, key.second - key.first);
    out << "      ";
    for (int i = 0; i <= t.i_max; ++i) out << i << (i < 10 ? "     " : "    ");
    out << "\n";
    for (int off = min_offset; off <= max_offset; ++off) {
        out << off << (off < 10 ? ":     " : ":    ");
        for (int i = 0; i <= t.i_max; ++i) {
            long long v = (i + off <= t.j_max) ? t.at(i, i + off) : 0;
            std::string cell = v == 0 ? "." : std::to_string(v);
            out << cell;
            for (size_t k = cell.size(); k < 6; ++k) out << ' ';
        }
        out << "\n";
    }
    return out.str();
}

nlohmann::json bound_report_json(const BoundReport& r) {
    return {{"ideal_id", r.ideal_id},
            {"height", r.height},
            {"linear_forms", r.linear_forms},
            {"strand", r.strand},
            {"bounds", r.bounds},
            {"satisfied", r.satisfied},
            {"attested", r.attested},
            {"tight_indices", r.tight_indices}};
}

nlohmann::json hilbert_json(const HilbertData& h) {
    return {{"hf", h.hf_values},
            {"numerator", h.numerator},
            {"dim", h.dim},
            {"multiplicity", h.multiplicity}};
}

} // namespace bettikit
