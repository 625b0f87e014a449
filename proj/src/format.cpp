#include "dglift/format.hpp"

#include <cctype>
#include <sstream>

namespace dglift {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

bool looks_like_scalar(const std::string& token)
{
    size_t i = (token[0] == '+' || token[0] == '-') ? 1 : 0;
    if (i >= token.size())
        return false;
    bool seen_digit = false;
    for (; i < token.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(token[i])))
            seen_digit = true;
        else if (token[i] != '/')
            return false;
    }
    return seen_digit;
}

bool valid_label(const std::string& token)
{
    if (token.empty())
        return false;
    if (!std::isalpha(static_cast<unsigned char>(token[0])) && token[0] != '_')
        return false;
    for (char c : token)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'')
            return false;
    return true;
}

std::vector<Line> tokenize(const std::string& text)
{
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        for (char c : raw)
            if (static_cast<unsigned char>(c) > 127)
                throw ParseError(number, 1, "non-ASCII byte in input");
        const auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw.erase(hash);
        /* Split on whitespace, keeping '(', ')', ',' and '.' as their
         * own tokens so tuples and composition lines parse uniformly. */
        std::vector<std::string> tokens;
        std::string current;
        auto flush = [&] {
            if (!current.empty()) {
                tokens.push_back(current);
                current.clear();
            }
        };
        for (char c : raw) {
            if (std::isspace(static_cast<unsigned char>(c))) {
                flush();
            }
            else if (c == '(' || c == ')' || c == ',' || c == '=') {
                flush();
                tokens.push_back(std::string(1, c));
            }
            else {
                current.push_back(c);
            }
        }
        flush();
        if (!tokens.empty())
            lines.push_back({number, std::move(tokens)});
    }
    return lines;
}

using LinComb = std::vector<std::pair<FieldElement, std::string>>;

/* <lincomb> := 0 | [sign] [scalar] label (('+'|'-') [scalar] label)* */
LinComb parse_lincomb(const Field& field, const Line& line, size_t start)
{
    LinComb out;
    if (start >= line.tokens.size())
        throw ParseError(line.number, 1, "expected a linear combination");
    if (start + 1 == line.tokens.size() && line.tokens[start] == "0")
        return out;

    FieldElement sign = FieldElement::one(field);
    std::optional<FieldElement> scalar;
    bool expect_term = true;
    for (size_t i = start; i < line.tokens.size(); ++i) {
        const std::string& token = line.tokens[i];
        if (token == "+" || token == "-") {
            if (expect_term && scalar)
                throw ParseError(line.number, 1, "dangling scalar in linear combination");
            if (!expect_term) {
                /* separator between terms */
            }
            sign = token == "-" ? -FieldElement::one(field) : FieldElement::one(field);
            expect_term = true;
            continue;
        }
        if (!expect_term)
            throw ParseError(line.number, 1, "missing '+' or '-' before '" + token + "'");
        if (looks_like_scalar(token)) {
            if (scalar)
                throw ParseError(line.number, 1, "two scalars in a row in linear combination");
            scalar = FieldElement::parse(field, token);
            continue;
        }
        if (!valid_label(token))
            throw ParseError(line.number, 1, "bad label '" + token + "'");
        FieldElement coeff = scalar.value_or(FieldElement::one(field)) * sign;
        out.emplace_back(coeff, token);
        scalar.reset();
        sign = FieldElement::one(field);
        expect_term = false;
    }
    if (expect_term)
        throw ParseError(line.number, 1, "linear combination ends with a dangling sign or scalar");
    return out;
}

int parse_int(const Line& line, const std::string& token)
{
    try {
        size_t used = 0;
        const int value = std::stoi(token, &used);
        if (used != token.size())
            throw std::invalid_argument(token);
        return value;
    }
    catch (const std::exception&) {
        throw ParseError(line.number, 1, "expected an integer, got '" + token + "'");
    }
}

size_t find_equals(const Line& line)
{
    for (size_t i = 0; i < line.tokens.size(); ++i)
        if (line.tokens[i] == "=")
            return i;
    throw ParseError(line.number, 1, "expected '='");
}

Tuple parse_tuple(const Line& line, size_t& i)
{
    if (i >= line.tokens.size() || line.tokens[i] != "(")
        throw ParseError(line.number, 1, "expected '(' starting a tuple");
    ++i;
    Tuple tuple;
    bool expect_label = true;
    while (i < line.tokens.size()) {
        const std::string& token = line.tokens[i];
        if (token == ")") {
            if (expect_label)
                throw ParseError(line.number, 1, "tuple ends with a comma");
            ++i;
            return tuple;
        }
        if (token == ",") {
            if (expect_label)
                throw ParseError(line.number, 1, "two commas in a row in a tuple");
            expect_label = true;
            ++i;
            continue;
        }
        if (!expect_label)
            throw ParseError(line.number, 1, "missing ',' in tuple");
        if (!valid_label(token))
            throw ParseError(line.number, 1, "bad label '" + token + "' in tuple");
        tuple.push_back(token);
        expect_label = false;
        ++i;
    }
    throw ParseError(line.number, 1, "unterminated tuple");
}

}  // namespace

const DgCategory& Problem::category(const std::string& name) const
{
    auto it = categories.find(name);
    if (it == categories.end())
        throw ShapeError("no category named '" + name + "'");
    return *it->second;
}

const AInfFunctor& Problem::functor(const std::string& name) const
{
    auto it = functors.find(name);
    if (it == functors.end())
        throw ShapeError("no functor named '" + name + "'");
    return it->second;
}

LiftProblem Problem::lift_problem() const
{
    if (!transform)
        throw ShapeError("file declares no transformation block");
    const AInfFunctor& from = functor(transform->from);
    const AInfFunctor& to = functor(transform->to);
    if (from.source != to.source || from.target != to.target)
        throw SourceTargetMismatch("transformation between functors with different end categories");
    return LiftProblem(*from.source, *from.target, from, to, transform->classes);
}

Problem parse_problem(const std::string& text, const std::optional<Field>& field_override)
{
    const std::vector<Line> lines = tokenize(text);
    Problem problem;
    bool field_seen = false;
    if (field_override)
        problem.field = *field_override;

    enum class Section { none, category, functor, transform };
    Section section = Section::none;
    DgCategory* category = nullptr;
    AInfFunctor* functor = nullptr;
    std::string hom_src, hom_tgt;
    std::string compose_pending;  // set when inside a COMPOSE block

    auto resolved_field = [&]() -> const Field& { return problem.field; };

    for (const auto& line : lines) {
        const std::string& head = line.tokens[0];
        try {
            if (!field_seen && head != "FIELD")
                throw ParseError(line.number, 1, "the file must start with a FIELD declaration");
            if (head == "FIELD") {
                if (line.tokens.size() != 2)
                    throw ParseError(line.number, 1, "usage: FIELD q|f<p>");
                if (!field_override)
                    problem.field = Field::parse(line.tokens[1]);
                if (field_seen)
                    throw ParseError(line.number, 1, "duplicate FIELD declaration");
                field_seen = true;
                continue;
            }
            if (head == "CATEGORY") {
                if (line.tokens.size() != 2 || !valid_label(line.tokens[1]))
                    throw ParseError(line.number, 1, "usage: CATEGORY <name>");
                const std::string& name = line.tokens[1];
                if (problem.categories.count(name))
                    throw ParseError(line.number, 1, "duplicate category '" + name + "'");
                auto owned = std::make_unique<DgCategory>(resolved_field());
                category = owned.get();
                problem.categories.emplace(name, std::move(owned));
                problem.category_order.push_back(name);
                section = Section::category;
                compose_pending.clear();
                continue;
            }
            if (head == "FUNCTOR") {
                /* FUNCTOR <name> : <src> -> <tgt> */
                if (line.tokens.size() != 6 || line.tokens[2] != ":" || line.tokens[4] != "->")
                    throw ParseError(line.number, 1, "usage: FUNCTOR <name> : <source> -> <target>");
                const std::string& name = line.tokens[1];
                if (problem.functors.count(name))
                    throw ParseError(line.number, 1, "duplicate functor '" + name + "'");
                auto sit = problem.categories.find(line.tokens[3]);
                auto tit = problem.categories.find(line.tokens[5]);
                if (sit == problem.categories.end())
                    throw ParseError(line.number, 1, "no category named '" + line.tokens[3] + "'");
                if (tit == problem.categories.end())
                    throw ParseError(line.number, 1, "no category named '" + line.tokens[5] + "'");
                DgCategory& src = *sit->second;
                DgCategory& tgt = *tit->second;
                if (!src.finalized())
                    src.finalize();
                if (!tgt.finalized())
                    tgt.finalize();
                AInfFunctor f;
                f.source = &src;
                f.target = &tgt;
                f.name = name;
                functor = &problem.functors.emplace(name, std::move(f)).first->second;
                problem.functor_order.push_back(name);
                section = Section::functor;
                continue;
            }
            if (head == "TRANSFORM") {
                if (line.tokens.size() != 6 || line.tokens[2] != ":" || line.tokens[4] != "->")
                    throw ParseError(line.number, 1, "usage: TRANSFORM <name> : <F> -> <G>");
                if (problem.transform)
                    throw ParseError(line.number, 1, "duplicate TRANSFORM block");
                problem.transform = TransformDecl{line.tokens[1], line.tokens[3], line.tokens[5], {}};
                problem.functor(line.tokens[3]);
                problem.functor(line.tokens[5]);
                section = Section::transform;
                continue;
            }

            if (section == Section::category) {
                if (category == nullptr)
                    throw ParseError(line.number, 1, "statement outside a CATEGORY block");
                if (head == "OBJECTS") {
                    for (size_t i = 1; i < line.tokens.size(); ++i) {
                        if (!valid_label(line.tokens[i]))
                            throw ParseError(line.number, 1, "bad object name '" + line.tokens[i] + "'");
                        category->add_object(line.tokens[i]);
                    }
                    continue;
                }
                if (head == "HOM") {
                    if (line.tokens.size() != 3)
                        throw ParseError(line.number, 1, "usage: HOM <src> <tgt>");
                    hom_src = line.tokens[1];
                    hom_tgt = line.tokens[2];
                    compose_pending.clear();
                    continue;
                }
                if (head == "basis") {
                    if (line.tokens.size() != 4 || line.tokens[2] != "degree")
                        throw ParseError(line.number, 1, "usage: basis <label> degree <j>");
                    if (hom_src.empty())
                        throw ParseError(line.number, 1, "basis line outside a HOM block");
                    if (!valid_label(line.tokens[1]))
                        throw ParseError(line.number, 1, "bad label '" + line.tokens[1] + "'");
                    category->add_basis(hom_src, hom_tgt, line.tokens[1], parse_int(line, line.tokens[3]));
                    continue;
                }
                if (head == "DIFF" || head == "COMPOSE") {
                    compose_pending = head;
                    continue;
                }
                if (head == "UNIT") {
                    if (line.tokens.size() != 3)
                        throw ParseError(line.number, 1, "usage: UNIT <object> <label>");
                    category->set_unit(line.tokens[1], line.tokens[2]);
                    continue;
                }
                if (head == "d" && compose_pending == "DIFF") {
                    /* d <label> = <lincomb> */
                    const size_t eq = find_equals(line);
                    if (eq != 2)
                        throw ParseError(line.number, 1, "usage: d <label> = <linear combination>");
                    category->set_differential(line.tokens[1], parse_lincomb(resolved_field(), line, eq + 1));
                    continue;
                }
                if (compose_pending == "COMPOSE") {
                    /* <g> . <f> = <lincomb> */
                    const size_t eq = find_equals(line);
                    if (eq != 3 || line.tokens[1] != ".")
                        throw ParseError(line.number, 1, "usage: <g> . <f> = <linear combination>");
                    category->set_compose(line.tokens[0], line.tokens[2],
                                          parse_lincomb(resolved_field(), line, eq + 1));
                    continue;
                }
                throw ParseError(line.number, 1, "unrecognized statement '" + head + "' in CATEGORY block");
            }

            if (section == Section::functor) {
                if (head == "obj") {
                    if (line.tokens.size() != 4 || line.tokens[2] != "->")
                        throw ParseError(line.number, 1, "usage: obj <x> -> <y>");
                    if (!functor->source->has_object(line.tokens[1]))
                        throw ParseError(line.number, 1, "unknown source object '" + line.tokens[1] + "'");
                    if (!functor->target->has_object(line.tokens[3]))
                        throw ParseError(line.number, 1, "unknown target object '" + line.tokens[3] + "'");
                    functor->object_map[line.tokens[1]] = line.tokens[3];
                    continue;
                }
                if (head == "comp") {
                    /* comp <d> (<f_d>,...,<f_1>) = <lincomb> */
                    size_t i = 2;
                    const int d = parse_int(line, line.tokens[1]);
                    const Tuple tuple = parse_tuple(line, i);
                    if (static_cast<int>(tuple.size()) != d)
                        throw ParseError(line.number, 1, "tuple length does not match the declared order");
                    if (i >= line.tokens.size() || line.tokens[i] != "=")
                        throw ParseError(line.number, 1, "expected '=' after the tuple");
                    const LinComb comb = parse_lincomb(resolved_field(), line, i + 1);
                    for (const auto& label : tuple)
                        if (!functor->source->has_label(label))
                            throw ParseError(line.number, 1, "unknown source label '" + label + "'");
                    if (!tuple_composable(*functor->source, tuple))
                        throw ParseError(line.number, 1, "tuple is not composable");
                    const std::string a = functor->on_object(tuple_source(*functor->source, tuple));
                    const std::string b = functor->on_object(tuple_target(*functor->source, tuple));
                    int degree_sum = 0;
                    for (const auto& label : tuple)
                        degree_sum += functor->source->resolve(label).degree;
                    Mor value = functor->target->zero_mor(a, b, degree_sum + 1 - d);
                    for (const auto& [coeff, label] : comb) {
                        if (!functor->target->has_label(label))
                            throw ParseError(line.number, 1, "unknown target label '" + label + "'");
                        value = add(value, scale(coeff, functor->target->basis_mor(label)));
                    }
                    functor->set_component(tuple, value);
                    continue;
                }
                throw ParseError(line.number, 1, "unrecognized statement '" + head + "' in FUNCTOR block");
            }

            if (section == Section::transform) {
                if (head == "at") {
                    const size_t eq = find_equals(line);
                    if (eq != 2)
                        throw ParseError(line.number, 1, "usage: at <object> = <coordinates>");
                    Vec coords;
                    for (size_t i = eq + 1; i < line.tokens.size(); ++i)
                        coords.push_back(FieldElement::parse(resolved_field(), line.tokens[i]));
                    problem.transform->classes[line.tokens[1]] = std::move(coords);
                    continue;
                }
                throw ParseError(line.number, 1, "unrecognized statement '" + head + "' in TRANSFORM block");
            }

            throw ParseError(line.number, 1, "unrecognized statement '" + head + "'");
        }
        catch (const ParseError&) {
            throw;
        }
        catch (const Error& err) {
            throw ParseError(line.number, 1, err.what());
        }
    }

    for (auto& [name, cat] : problem.categories)
        if (!cat->finalized())
            cat->finalize();
    return problem;
}

std::vector<std::string> validate_problem(const Problem& problem)
{
    std::vector<std::string> findings;
    for (const auto& name : problem.category_order) {
        const ValidationReport report = problem.category(name).validate();
        for (const auto& entry : report.entries) {
            std::string tuple;
            for (size_t i = 0; i < entry.tuple.size(); ++i)
                tuple += (i ? ", " : "") + entry.tuple[i];
            findings.push_back("category " + name + ": " + entry.axiom + " violated at (" + tuple + ")"
                               + (entry.detail.empty() ? "" : ": " + entry.detail));
        }
    }
    if (!findings.empty())
        return findings;  // functor checks assume valid categories

    for (const auto& name : problem.functor_order) {
        const AInfFunctor& f = problem.functor(name);
        try {
            const FunctorReport report = check_ainf_functor(f, check_negative_vanishing(f, f).d_max + 1);
            for (const auto& entry : report.entries) {
                std::string tuple;
                for (size_t i = 0; i < entry.tuple.size(); ++i)
                    tuple += (i ? ", " : "") + entry.tuple[i];
                findings.push_back("functor " + name + ": " + entry.kind + " fails at degree "
                                   + std::to_string(entry.degree) + " on (" + tuple + ")");
            }
        }
        catch (const Error& err) {
            findings.push_back("functor " + name + ": " + err.what());
        }
    }
    if (!findings.empty())
        return findings;

    if (problem.transform) {
        try {
            problem.lift_problem();
        }
        catch (const Error& err) {
            findings.push_back(std::string("transformation: ") + err.what());
        }
    }
    return findings;
}

std::string format_scalar(const FieldElement& x)
{
    return x.str();
}

std::string format_lincomb(const DgCategory& cat, const Mor& value)
{
    if (value.is_zero())
        return "0";
    std::string out;
    const auto& names = cat.hom(value.src, value.tgt).space().labels(value.degree());
    for (size_t i = 0; i < value.el.coords.size(); ++i) {
        if (value.el.coords[i].is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        out += format_scalar(value.el.coords[i]) + " " + names[i];
    }
    return out;
}

}  // namespace dglift
