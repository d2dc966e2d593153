#include "nrk/cli.hpp"

#include <sstream>

#include "nrk/arakelov.hpp"
#include "nrk/dilog.hpp"
#include "nrk/embeddings.hpp"
#include "nrk/errors.hpp"
#include "nrk/heights.hpp"
#include "nrk/io.hpp"
#include "nrk/kmodel.hpp"
#include "nrk/regulator.hpp"
#include "nrk/relations.hpp"

namespace nrk::cli {

using json = nlohmann::json;

namespace {

const char* const commands[] = {"field-info", "dilog", "bloch-check", "regulator",
                                "unit-reg",   "degree", "height",      "kranks"};

void check_schema(const json& j, const std::string& where)
{
    if (!j.contains("schema"))
        return;
    if (!j.at("schema").is_number_integer() || j.at("schema").get<int>() != 1)
        throw format_error("key '" + where + "schema': only schema 1 is supported");
}

void allow_keys(const json& j, std::initializer_list<const char*> keys, const std::string& where)
{
    for (const auto& [k, v] : j.items()) {
        bool ok = k == "schema";
        for (const char* a : keys)
            ok = ok || k == a;
        if (!ok)
            throw format_error("key '" + where + k + "': unknown");
    }
}

const json& require(const json& j, const char* key, const std::string& where)
{
    if (!j.contains(key))
        throw format_error("key '" + where + key + "': missing");
    return j.at(key);
}

struct Context {
    const JobSpec& job;
    NumberField field;
    std::shared_ptr<const EmbeddingSet> emb;
    PrecisionContext prec;
    int digits;

    std::string num(const Real& x) const { return io::format(x, digits); }
    json vec(const std::vector<Real>& v) const
    {
        json a = json::array();
        for (const auto& x : v)
            a.push_back(num(x));
        return a;
    }
};

json embedding_order(const EmbeddingSet& e)
{
    json a = json::array();
    for (size_t i = 0; i < e.size(); ++i)
        a.push_back(json{{"index", i},
                         {"kind", e.is_real(i) ? "real" : "complex"},
                         {"conjugate", e.conjugate(i)}});
    return a;
}

json field_info(Context& c)
{
    allow_keys(c.job.payload, {}, "payload.");
    auto [r1, r2] = c.emb->signature();
    json roots = json::array();
    for (const auto& z : c.emb->roots())
        roots.push_back(json{{"re", c.num(z.re)}, {"im", c.num(z.im)}});
    return json{{"field", io::field_record(c.field)},
                {"degree", c.field.degree()},
                {"signature", {r1, r2}},
                {"irreducibility_certified", c.field.irreducibility_certified()},
                {"embeddings", roots}};
}

json dilog_cmd(Context& c)
{
    allow_keys(c.job.payload, {"z"}, "payload.");
    const json& zj = require(c.job.payload, "z", "payload.");
    if (!zj.is_string())
        throw format_error("key 'payload.z': expected a complex literal string");
    Complex z = parse_complex(zj.get<std::string>(), c.prec.bits());
    Complex l = li2(z, c.prec);
    Real d = bloch_wigner(z, c.prec);
    return json{{"z", {{"re", c.num(z.re)}, {"im", c.num(z.im)}}},
                {"li2", {{"re", c.num(l.re)}, {"im", c.num(l.im)}}},
                {"bloch_wigner", c.num(d)}};
}

/* G generated by -1 and every lambda, 1 - lambda in the support */
MultiplicativePresentation presentation_for(const std::vector<FieldElement>& elems, const Context& c)
{
    std::vector<FieldElement> gens{-c.field.one()};
    auto push = [&](const FieldElement& a) {
        for (const auto& g : gens)
            if (g == a)
                return;
        gens.push_back(a);
    };
    for (const auto& l : elems) {
        if (!is_in_Rcirc(l))
            throw domain_error("candidate is not in R-circ: lambda and 1 - lambda must both be units");
        push(l);
        push(c.field.one() - l);
    }
    return relation_lattice(gens, c.emb);
}

json regulator_record(const RegulatorVector& v, const Context& c)
{
    return json{{"weight", v.weight == Weight::unit ? "unit" : "k3"},
                {"values", c.vec(v.values)},
                {"embedding_order", embedding_order(*c.emb)}};
}

json int_rows(const IntMatrix& m)
{
    json a = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (const auto& x : m.row(i))
            r.push_back(x.get_str());
        a.push_back(r);
    }
    return a;
}

json bloch_check(Context& c)
{
    allow_keys(c.job.payload, {"candidates", "check"}, "payload.");
    const json& cj = require(c.job.payload, "candidates", "payload.");
    if (!cj.is_array() || cj.empty())
        throw format_error("key 'payload.candidates': expected a non-empty array of elements");
    std::vector<FieldElement> cands;
    for (const auto& e : cj)
        cands.push_back(io::parse_element(c.field, e, "payload.candidates"));
    MultiplicativePresentation p = presentation_for(cands, c);
    ExteriorSquare sq(p);
    BlochKernel k = bloch_kernel(cands, p);

    json invariants = json::array();
    for (const auto& d : sq.moduli())
        invariants.push_back(d.get_str());
    json regs = json::array();
    for (const auto& x : k.basis)
        regs.push_back(c.vec(k3_regulator(x, c.emb, c.prec).values));
    json out{{"generators", json::array()},
             {"relations", int_rows(p.relations)},
             {"torsion_order", p.torsion_order.get_str()},
             {"exterior_square_invariants", invariants},
             {"kernel_basis", int_rows(k.lattice)},
             {"kernel_modulo_torsion", int_rows(k.modulo_torsion)},
             {"kernel_regulators", regs},
             {"embedding_order", embedding_order(*c.emb)}};
    for (const auto& g : p.generators)
        out["generators"].push_back(io::element_record(g));
    if (c.job.payload.contains("check")) {
        const json& v = c.job.payload.at("check");
        if (!v.is_array() || v.size() != cands.size())
            throw format_error("key 'payload.check': needs one multiplicity per candidate");
        IntVector w;
        BlochElement x;
        for (size_t i = 0; i < v.size(); ++i) {
            w.push_back(io::parse_integer(v[i], "payload.check"));
            x.support.push_back(cands[i]);
            x.multiplicities.push_back(w.back());
        }
        bool in = k.contains(w);
        json chk{{"multiplicities", v}, {"in_kernel", in},
                 {"vanishes_only_modulo_torsion", k.vanishes_only_modulo_torsion(w)}};
        if (in)
            chk["regulator"] = regulator_record(k3_regulator(x, c.emb, c.prec), c);
        out["check"] = chk;
    }
    return out;
}

json regulator_cmd(Context& c)
{
    allow_keys(c.job.payload, {"element", "check_kernel"}, "payload.");
    BlochElement x = io::parse_bloch_element(c.field, require(c.job.payload, "element", "payload."));
    bool check = true;
    if (c.job.payload.contains("check_kernel")) {
        if (!c.job.payload.at("check_kernel").is_boolean())
            throw format_error("key 'payload.check_kernel': expected a boolean");
        check = c.job.payload.at("check_kernel").get<bool>();
    }
    std::optional<MultiplicativePresentation> p;
    if (check)
        p = presentation_for(x.support, c);
    RegulatorVector v = k3_regulator(x, c.emb, c.prec, p ? &*p : nullptr);
    return regulator_record(v, c);
}

json unit_reg(Context& c)
{
    allow_keys(c.job.payload, {"unit"}, "payload.");
    FieldElement u = io::parse_element(c.field, require(c.job.payload, "unit", "payload."), "payload.unit");
    RegulatorVector v = unit_regulator(u, c.emb);
    Real sum(c.emb->bits());
    for (const auto& x : v.values)
        sum += x;
    json out = regulator_record(v, c);
    out["sum"] = c.num(sum);
    out["s_map"] = c.num(s_map(v));
    return out;
}

MetrizedLineBundle bundle_from(const json& payload, const Context& c)
{
    FractionalIdeal ideal = FractionalIdeal::unit(c.field);
    if (payload.contains("ideal_basis"))
        ideal = FractionalIdeal::from_rows(
            c.field, io::parse_rational_matrix(payload.at("ideal_basis"), "payload.ideal_basis", c.field.degree()));
    else if (payload.contains("ideal_generators")) {
        const json& g = payload.at("ideal_generators");
        if (!g.is_array() || g.empty())
            throw format_error("key 'payload.ideal_generators': expected a non-empty array");
        std::vector<FieldElement> gens;
        for (const auto& e : g)
            gens.push_back(io::parse_element(c.field, e, "payload.ideal_generators"));
        ideal = FractionalIdeal::generated_by(gens);
    }
    if (!payload.contains("metric") || payload.at("metric") == "standard")
        return standard_bundle(ideal, c.emb);
    const json& m = payload.at("metric");
    if (!m.is_array() || m.size() != c.emb->size())
        throw format_error("key 'payload.metric': expected \"standard\" or one positive decimal per embedding");
    Metric metric;
    for (const auto& x : m) {
        if (!x.is_string())
            throw format_error("key 'payload.metric': values must be decimal strings");
        metric.values.push_back(Real::from_string(x.get<std::string>(), c.emb->bits()));
    }
    return make_bundle(ideal, metric, c.emb);
}

json bundle_record(const MetrizedLineBundle& l, const Context& c)
{
    json rows = json::array();
    const QMatrix& b = l.ideal.basis();
    for (size_t i = 0; i < b.rows(); ++i) {
        json r = json::array();
        for (size_t j = 0; j < b.cols(); ++j)
            r.push_back(io::to_string(b(i, j)));
        rows.push_back(r);
    }
    return json{{"ideal_basis", rows}, {"metric", c.vec(l.metric.values)}};
}

json degree_cmd(Context& c)
{
    allow_keys(c.job.payload, {"ideal_basis", "ideal_generators", "metric", "sections"}, "payload.");
    MetrizedLineBundle l = bundle_from(c.job.payload, c);
    std::vector<FieldElement> sections{l.ideal.reference_section()};
    if (c.job.payload.contains("sections")) {
        sections.clear();
        for (const auto& e : c.job.payload.at("sections"))
            sections.push_back(io::parse_element(c.field, e, "payload.sections"));
    }
    json per = json::array();
    for (const auto& s : sections)
        per.push_back(json{{"section", io::element_record(s)},
                           {"index_quotient", io::to_string(index_quotient(l.ideal, s))},
                           {"degree", c.num(arithmetic_degree(l, s))}});
    return json{{"bundle", bundle_record(l, c)}, {"ideal_norm", io::to_string(ideal_norm(l.ideal))},
                {"sections", per}};
}

json height_cmd(Context& c)
{
    allow_keys(c.job.payload, {"ideal_basis", "ideal_generators", "metric", "N", "generator"}, "payload.");
    MetrizedLineBundle l = bundle_from(c.job.payload, c);
    mpz_class n = io::parse_integer(require(c.job.payload, "N", "payload."), "payload.N");
    if (n < 1 || n > 64)
        throw format_error("key 'payload.N': expected an integer in [1, 64]");
    FieldElement g = io::parse_element(c.field, require(c.job.payload, "generator", "payload."), "payload.generator");
    DiffK0Class x = c_hat(l, n.get_ui(), g);
    Real h = height(x);
    Real d = arithmetic_degree(l);
    return json{{"bundle", bundle_record(l, c)},
                {"N", n.get_ui()},
                {"scaling_vector", c.vec(x.scaling_vector)},
                {"height", c.num(h)},
                {"arithmetic_degree", c.num(d)},
                {"difference", c.num(h - d)}};
}

json kranks(Context& c)
{
    allow_keys(c.job.payload, {"max_p"}, "payload.");
    int max_p = default_max_p;
    if (c.job.payload.contains("max_p")) {
        mpz_class m = io::parse_integer(c.job.payload.at("max_p"), "payload.max_p");
        if (m < 1 || m > 1000)
            throw format_error("key 'payload.max_p': expected an integer in [1, 1000]");
        max_p = static_cast<int>(m.get_si());
    }
    GradedKAlgebra model(c.emb, max_p);
    auto [r1, r2] = model.signature();
    json rows = json::array();
    rows.push_back(json{{"degree", 0}, {"dimension", 1}, {"rank", 1}, {"generators", json::array({"1"})}});
    for (int p = 1; p <= max_p; ++p) {
        int d = 1 - 2 * p;
        json labels = json::array();
        for (const auto& g : model.generators(d))
            labels.push_back(g.label);
        rows.push_back(json{{"degree", d},
                            {"dimension", model.dimension(d)},
                            {"rank", model.rank_in_degree(d)},
                            {"generators", labels}});
    }
    return json{{"signature", {r1, r2}}, {"table", rows}};
}

void text_lines(const json& j, const std::string& prefix, std::ostringstream& os)
{
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            text_lines(v, prefix.empty() ? k : prefix + "." + k, os);
    } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_object(); })) {
        for (size_t i = 0; i < j.size(); ++i)
            text_lines(j[i], prefix + "[" + std::to_string(i) + "]", os);
    } else if (j.is_string()) {
        os << prefix << ": " << j.get<std::string>() << "\n";
    } else {
        os << prefix << ": " << j.dump() << "\n";
    }
}

json dispatch(Context& c)
{
    const std::string& cmd = c.job.command;
    if (cmd == "field-info")
        return field_info(c);
    if (cmd == "dilog")
        return dilog_cmd(c);
    if (cmd == "bloch-check")
        return bloch_check(c);
    if (cmd == "regulator")
        return regulator_cmd(c);
    if (cmd == "unit-reg")
        return unit_reg(c);
    if (cmd == "degree")
        return degree_cmd(c);
    if (cmd == "height")
        return height_cmd(c);
    return kranks(c);
}

std::string error_line(const char* code, const std::string& message)
{
    return json{{"schema", 1}, {"error", code}, {"message", message}}.dump() + "\n";
}

}  // namespace

JobSpec job_from_json(const json& j)
{
    if (!j.is_object())
        throw format_error("key 'job': expected an object");
    check_schema(j, "");
    allow_keys(j, {"command", "field", "payload", "precision", "output"}, "");
    JobSpec job;
    const json& cmd = require(j, "command", "");
    if (!cmd.is_string())
        throw format_error("key 'command': expected a string");
    job.command = cmd.get<std::string>();
    if (j.contains("field"))
        job.field = j.at("field");
    if (j.contains("payload"))
        job.payload = j.at("payload");
    if (j.contains("precision")) {
        if (!j.at("precision").is_number_integer())
            throw format_error("key 'precision': expected an integer");
        job.precision = j.at("precision").get<int>();
    }
    if (j.contains("output")) {
        if (!j.at("output").is_string())
            throw format_error("key 'output': expected \"text\" or \"json\"");
        job.output = j.at("output").get<std::string>();
    }
    return job;
}

RunResult run(const JobSpec& job)
{
    RunResult r;
    try {
        if (std::find(std::begin(commands), std::end(commands), job.command) == std::end(commands))
            throw format_error("key 'command': unknown command '" + job.command + "'");
        if (job.output != "text" && job.output != "json")
            throw format_error("key 'output': expected \"text\" or \"json\"");
        if (job.precision < 16 || job.precision > 2000)
            throw format_error("key 'precision': expected an integer in [16, 2000]");
        if (!job.payload.is_object())
            throw format_error("key 'payload': expected an object");
        check_schema(job.payload, "payload.");
        json fj = job.field;
        if (fj.is_null())
            fj = json{{"poly", {0, 1}}};
        check_schema(fj, "field.");
        if (fj.is_object())
            fj.erase("schema");
        NumberField field = io::parse_field(fj);
        PrecisionContext prec{job.precision, guard_digits};
        prec.validate();
        auto emb = std::make_shared<const EmbeddingSet>(embeddings(field, job.precision));
        Context c{job, field, emb, prec, job.precision};

        json body = dispatch(c);
        json out{{"schema", 1}, {"command", job.command}, {"precision", job.precision},
                 {"maximal", field.maximality_asserted()}};
        out["result"] = body;
        if (job.output == "json") {
            r.out = out.dump(2) + "\n";
        } else {
            std::ostringstream os;
            text_lines(out, "", os);
            r.out = os.str();
        }
    } catch (const format_error& e) {
        r.exit_code = 1;
        r.err = error_line(e.code(), e.what());
    } catch (const domain_error& e) {
        r.exit_code = 2;
        r.err = error_line(e.code(), e.what());
    } catch (const precision_error& e) {
        r.exit_code = 3;
        r.err = error_line(e.code(), e.what());
    } catch (const json::exception& e) {
        r.exit_code = 1;
        r.err = error_line("format", e.what());
    }
    return r;
}

}  // namespace nrk::cli
