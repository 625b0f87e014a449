#include "dglift/certificate.hpp"

#include <cctype>
#include <sstream>

namespace dglift {

namespace {

std::string fnv1a_digest(const std::string& payload)
{
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : payload) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    std::ostringstream os;
    os << std::hex << hash;
    return os.str();
}

std::string coords_str(const Vec& coords)
{
    std::string out;
    for (const auto& x : coords)
        out += (out.empty() ? "" : " ") + x.str();
    return out.empty() ? "-" : out;
}

std::string lincomb_str(const std::vector<std::pair<FieldElement, std::string>>& terms)
{
    if (terms.empty())
        return "0";
    std::string out;
    for (const auto& [coeff, label] : terms) {
        if (!out.empty())
            out += " + ";
        out += coeff.str() + " " + label;
    }
    return out;
}

std::vector<std::pair<FieldElement, std::string>> mor_terms(const DgCategory& cat, const Mor& value)
{
    std::vector<std::pair<FieldElement, std::string>> terms;
    const auto& names = cat.hom(value.src, value.tgt).space().labels(value.degree());
    for (size_t i = 0; i < value.el.coords.size(); ++i)
        if (!value.el.coords[i].is_zero())
            terms.emplace_back(value.el.coords[i], names[i]);
    return terms;
}

}  // namespace

bool CertificateData::operator==(const CertificateData& other) const
{
    return field == other.field && transform_name == other.transform_name && from_name == other.from_name
           && to_name == other.to_name && d_max == other.d_max && classes == other.classes
           && at_lines == other.at_lines && comp_lines == other.comp_lines && iso_flag == other.iso_flag
           && inverse_classes == other.inverse_classes && transcript == other.transcript;
}

CertificateData certificate_data(const Problem& problem, const LiftCertificate& cert)
{
    CertificateData data;
    data.field = problem.field;
    data.transform_name = problem.transform ? problem.transform->name : "phi";
    data.from_name = cert.h.from->name;
    data.to_name = cert.h.to->name;
    data.d_max = cert.d_max;

    const DgCategory& src = *cert.h.from->source;
    const DgCategory& tgt = *cert.h.from->target;
    const H0Category target_h0(tgt);

    for (const auto& e : src.objects()) {
        data.classes[e] = target_h0.class_of(cert.h.at(e));
        data.at_lines.emplace_back(e, mor_terms(tgt, cert.h.at(e)));
    }
    for (int d = 1; d <= cert.d_max; ++d) {
        for (const auto& tuple : composable_tuples(src, d, true)) {
            const Mor value = cert.h.component(tuple);
            if (!value.is_zero())
                data.comp_lines.emplace_back(d, tuple, mor_terms(tgt, value));
        }
    }
    data.iso_flag = cert.iso_checked && cert.iso_flag;
    data.inverse_classes = cert.inverse_classes;
    data.transcript = cert.transcript;
    return data;
}

std::string serialize_certificate_data(const CertificateData& data)
{
    std::ostringstream os;
    os << "DGLIFT CERTIFICATE v1\n";
    os << "FIELD " << data.field.name() << "\n";
    os << "TRANSFORM " << data.transform_name << " : " << data.from_name << " -> " << data.to_name << "\n";
    os << "DMAX " << data.d_max << "\n";
    for (const auto& [e, coords] : data.classes)
        os << "CLASS " << e << " = " << coords_str(coords) << "\n";
    for (const auto& [e, terms] : data.at_lines)
        os << "AT " << e << " = " << lincomb_str(terms) << "\n";
    for (const auto& [d, tuple, terms] : data.comp_lines) {
        os << "COMP " << d << " (";
        for (size_t i = 0; i < tuple.size(); ++i)
            os << (i ? "," : "") << tuple[i];
        os << ") = " << lincomb_str(terms) << "\n";
    }
    os << "ISO " << (data.iso_flag ? "true" : "false") << "\n";
    for (const auto& [e, coords] : data.inverse_classes)
        os << "INVERSE " << e << " = " << coords_str(coords) << "\n";
    os << "TRANSCRIPT " << data.transcript.size() << "\n";
    for (const auto& line : data.transcript)
        os << "| " << line << "\n";
    std::string payload = os.str();
    payload += "DIGEST " + fnv1a_digest(payload) + "\n";
    return payload;
}

std::string serialize_certificate(const Problem& problem, const LiftCertificate& cert)
{
    return serialize_certificate_data(certificate_data(problem, cert));
}

namespace {

std::vector<std::string> split_ws(const std::string& line)
{
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string token;
    while (in >> token)
        tokens.push_back(token);
    return tokens;
}

Vec parse_coords(const Field& field, const std::vector<std::string>& tokens, size_t start, int line_no)
{
    Vec coords;
    if (start < tokens.size() && tokens[start] == "-" && start + 1 == tokens.size())
        return coords;
    for (size_t i = start; i < tokens.size(); ++i) {
        try {
            coords.push_back(FieldElement::parse(field, tokens[i]));
        }
        catch (const Error& err) {
            throw ParseError(line_no, 1, err.what());
        }
    }
    return coords;
}

std::vector<std::pair<FieldElement, std::string>> parse_terms(const Field& field,
                                                              const std::vector<std::string>& tokens, size_t start,
                                                              int line_no)
{
    std::vector<std::pair<FieldElement, std::string>> terms;
    if (start + 1 == tokens.size() && tokens[start] == "0")
        return terms;
    size_t i = start;
    while (i < tokens.size()) {
        if (i + 1 >= tokens.size())
            throw ParseError(line_no, 1, "truncated linear combination");
        FieldElement coeff(field);
        try {
            coeff = FieldElement::parse(field, tokens[i]);
        }
        catch (const Error& err) {
            throw ParseError(line_no, 1, err.what());
        }
        terms.emplace_back(coeff, tokens[i + 1]);
        i += 2;
        if (i < tokens.size()) {
            if (tokens[i] != "+")
                throw ParseError(line_no, 1, "expected '+' between terms");
            ++i;
        }
    }
    return terms;
}

}  // namespace

CertificateData parse_certificate(const std::string& text)
{
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    CertificateData data;
    bool header_seen = false;
    bool digest_seen = false;
    std::string payload;
    size_t transcript_expected = 0;
    bool in_transcript = false;

    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();

        if (in_transcript && transcript_expected > 0) {
            if (raw.rfind("| ", 0) != 0 && raw != "|")
                throw ParseError(line_no, 1, "expected a transcript line");
            data.transcript.push_back(raw.size() > 2 ? raw.substr(2) : "");
            --transcript_expected;
            if (transcript_expected == 0)
                in_transcript = false;
            payload += raw + "\n";
            continue;
        }

        const std::vector<std::string> tokens = split_ws(raw);
        if (tokens.empty())
            throw ParseError(line_no, 1, "unexpected blank line in certificate");

        if (!header_seen) {
            if (raw != "DGLIFT CERTIFICATE v1")
                throw ParseError(line_no, 1, "not a certificate file");
            header_seen = true;
            payload += raw + "\n";
            continue;
        }

        if (tokens[0] == "DIGEST") {
            if (tokens.size() != 2)
                throw ParseError(line_no, 1, "usage: DIGEST <hex>");
            if (fnv1a_digest(payload) != tokens[1])
                throw ParseError(line_no, 1, "digest mismatch: certificate is corrupt");
            digest_seen = true;
            continue;
        }

        payload += raw + "\n";
        if (tokens[0] == "FIELD") {
            if (tokens.size() != 2)
                throw ParseError(line_no, 1, "usage: FIELD q|f<p>");
            try {
                data.field = Field::parse(tokens[1]);
            }
            catch (const Error& err) {
                throw ParseError(line_no, 1, err.what());
            }
        }
        else if (tokens[0] == "TRANSFORM") {
            if (tokens.size() != 6 || tokens[2] != ":" || tokens[4] != "->")
                throw ParseError(line_no, 1, "usage: TRANSFORM <name> : <F> -> <G>");
            data.transform_name = tokens[1];
            data.from_name = tokens[3];
            data.to_name = tokens[5];
        }
        else if (tokens[0] == "DMAX") {
            if (tokens.size() != 2)
                throw ParseError(line_no, 1, "usage: DMAX <n>");
            data.d_max = std::stoi(tokens[1]);
        }
        else if (tokens[0] == "CLASS") {
            if (tokens.size() < 3 || tokens[2] != "=")
                throw ParseError(line_no, 1, "usage: CLASS <object> = <coordinates>");
            data.classes[tokens[1]] = parse_coords(data.field, tokens, 3, line_no);
        }
        else if (tokens[0] == "AT") {
            if (tokens.size() < 3 || tokens[2] != "=")
                throw ParseError(line_no, 1, "usage: AT <object> = <linear combination>");
            data.at_lines.emplace_back(tokens[1], parse_terms(data.field, tokens, 3, line_no));
        }
        else if (tokens[0] == "COMP") {
            if (tokens.size() < 4)
                throw ParseError(line_no, 1, "usage: COMP <d> (<tuple>) = <linear combination>");
            const int d = std::stoi(tokens[1]);
            const std::string& tup = tokens[2];
            if (tup.size() < 2 || tup.front() != '(' || tup.back() != ')')
                throw ParseError(line_no, 1, "expected a parenthesized tuple");
            Tuple tuple;
            std::string current;
            for (size_t i = 1; i + 1 < tup.size(); ++i) {
                if (tup[i] == ',') {
                    tuple.push_back(current);
                    current.clear();
                }
                else {
                    current.push_back(tup[i]);
                }
            }
            if (!current.empty())
                tuple.push_back(current);
            if (static_cast<int>(tuple.size()) != d)
                throw ParseError(line_no, 1, "tuple length does not match the declared order");
            if (tokens[3] != "=")
                throw ParseError(line_no, 1, "expected '=' after the tuple");
            data.comp_lines.emplace_back(d, tuple, parse_terms(data.field, tokens, 4, line_no));
        }
        else if (tokens[0] == "ISO") {
            if (tokens.size() != 2 || (tokens[1] != "true" && tokens[1] != "false"))
                throw ParseError(line_no, 1, "usage: ISO true|false");
            data.iso_flag = tokens[1] == "true";
        }
        else if (tokens[0] == "INVERSE") {
            if (tokens.size() < 3 || tokens[2] != "=")
                throw ParseError(line_no, 1, "usage: INVERSE <object> = <coordinates>");
            data.inverse_classes[tokens[1]] = parse_coords(data.field, tokens, 3, line_no);
        }
        else if (tokens[0] == "TRANSCRIPT") {
            if (tokens.size() != 2)
                throw ParseError(line_no, 1, "usage: TRANSCRIPT <count>");
            transcript_expected = static_cast<size_t>(std::stoul(tokens[1]));
            in_transcript = transcript_expected > 0;
        }
        else {
            throw ParseError(line_no, 1, "unrecognized certificate line '" + tokens[0] + "'");
        }
    }

    if (!header_seen)
        throw ParseError(1, 1, "empty certificate");
    if (!digest_seen)
        throw ParseError(line_no, 1, "certificate has no DIGEST line");
    return data;
}

std::vector<std::string> certify_against_problem(const Problem& problem, const CertificateData& data)
{
    std::vector<std::string> findings;
    if (!(problem.field == data.field)) {
        findings.push_back("field mismatch: problem over " + problem.field.name() + ", certificate over "
                           + data.field.name());
        return findings;
    }

    LiftProblem lift = problem.lift_problem();
    const AInfFunctor& from = lift.from();
    const AInfFunctor& to = lift.to();
    if (from.name != data.from_name || to.name != data.to_name) {
        findings.push_back("certificate names functors " + data.from_name + " -> " + data.to_name
                           + " but the problem transform is " + from.name + " -> " + to.name);
        return findings;
    }

    const DgCategory& src = lift.source();
    const DgCategory& tgt = lift.target();

    const int d_max = check_negative_vanishing(from, to).d_max;
    if (d_max != data.d_max)
        findings.push_back("certificate DMAX " + std::to_string(data.d_max) + " differs from the recomputed bound "
                           + std::to_string(d_max));

    /* Rebuild the raw transformation; the transcript plays no role. */
    PreNatTrans h = zero_prenat(from, to, 0);
    try {
        for (const auto& [e, terms] : data.at_lines) {
            if (!src.has_object(e)) {
                findings.push_back("AT line for unknown object '" + e + "'");
                return findings;
            }
            Mor value = tgt.zero_mor(from.on_object(e), to.on_object(e), 0);
            for (const auto& [coeff, label] : terms)
                value = add(value, scale(coeff, tgt.basis_mor(label)));
            h.set_at(e, value);
        }
        for (const auto& [d, tuple, terms] : data.comp_lines) {
            int degree_sum = 0;
            for (const auto& label : tuple)
                degree_sum += src.resolve(label).degree;
            Mor value = tgt.zero_mor(from.on_object(tuple_source(src, tuple)),
                                     to.on_object(tuple_target(src, tuple)), degree_sum - d);
            for (const auto& [coeff, label] : terms)
                value = add(value, scale(coeff, tgt.basis_mor(label)));
            h.set_component(tuple, value);
        }
    }
    catch (const Error& err) {
        findings.push_back(std::string("certificate data does not bind to the problem: ") + err.what());
        return findings;
    }

    for (const auto& failure : verify_lift(lift, h, d_max))
        findings.push_back(failure);

    /* The certificate's class lines must match the problem's request. */
    for (const auto& e : src.objects()) {
        auto it = data.classes.find(e);
        if (it == data.classes.end()) {
            findings.push_back("certificate has no CLASS line for object '" + e + "'");
            continue;
        }
        if (it->second != lift.classes().at(e))
            findings.push_back("certificate class at '" + e + "' differs from the problem's transformation");
    }

    /* Re-run the isomorphism check rather than trusting the flag. */
    bool iso = true;
    for (const auto& e : src.objects()) {
        const auto inverse = h0_invertible(lift.target_h0(), from.on_object(e), to.on_object(e),
                                           lift.target_h0().class_of(h.at(e)));
        if (!inverse) {
            iso = false;
            continue;
        }
        auto it = data.inverse_classes.find(e);
        if (data.iso_flag && (it == data.inverse_classes.end() || it->second != *inverse))
            findings.push_back("recorded inverse class at '" + e + "' does not match the recomputed inverse");
    }
    if (iso != data.iso_flag)
        findings.push_back(std::string("iso flag is ") + (data.iso_flag ? "true" : "false")
                           + " but recomputation says " + (iso ? "true" : "false"));

    return findings;
}

}  // namespace dglift
