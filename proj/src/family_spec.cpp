#include "locdom/family_spec.hpp"

#include <array>
#include <charconv>
#include <optional>
#include <utility>

#include "locdom/errors.hpp"

namespace locdom {

namespace {

struct TagName {
    std::string_view name;
    FamilyTag tag;
};

constexpr std::array<TagName, 19> kTags{{
    {"P", FamilyTag::Path},
    {"C", FamilyTag::Cycle},
    {"W", FamilyTag::Wheel},
    {"K", FamilyTag::Complete},
    {"S", FamilyTag::Star},
    {"Kb", FamilyTag::CompleteBipartite},
    {"B2", FamilyTag::BiStar},
    {"paw", FamilyTag::Paw},
    {"bull", FamilyTag::Bull},
    {"banner", FamilyTag::Banner},
    {"cobanner", FamilyTag::BannerComplement},
    {"butterfly", FamilyTag::Butterfly},
    {"corner", FamilyTag::Corner},
    {"F8a", FamilyTag::Fig8A},
    {"F8b", FamilyTag::Fig8B},
    {"F8c", FamilyTag::Fig8C},
    {"F8d", FamilyTag::Fig8D},
    {"F6d", FamilyTag::Fig6D},
    {"F6e", FamilyTag::Fig6E},
}};

std::optional<FamilyTag> tag_named(std::string_view name) {
    for (const TagName& t : kTags)
        if (t.name == name) return t.tag;
    return std::nullopt;
}

std::string_view tag_name(FamilyTag tag) {
    for (const TagName& t : kTags)
        if (t.tag == tag) return t.name;
    return "?";
}

struct Token {
    std::string_view text;
    std::size_t offset;
};

[[noreturn]] void bad_token(const Token& t, const std::string& why) {
    throw ParseError("family spec: " + why + " '" + std::string(t.text) + "'", t.offset);
}

int to_int(const Token& t) {
    int value = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (t.text.empty() || ec != std::errc() || ptr != last) bad_token(t, "expected an integer, got");
    return value;
}

// Splits at ',' and ';', keeping offsets relative to the whole spec.
std::vector<Token> split_args(std::string_view args, std::size_t base) {
    std::vector<Token> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= args.size(); ++i) {
        if (i == args.size() || args[i] == ',' || args[i] == ';') {
            out.push_back({args.substr(start, i - start), base + start});
            start = i + 1;
        }
    }
    return out;
}

// Items are either bare integers (appended to the current key) or key=value.
struct KeyedArgs {
    std::vector<std::pair<Token, std::vector<int>>> fields;
};

KeyedArgs parse_keyed(const std::vector<Token>& items, std::string_view default_key) {
    KeyedArgs out;
    for (const Token& item : items) {
        const std::size_t eq = item.text.find('=');
        if (eq == std::string_view::npos) {
            if (out.fields.empty()) {
                if (default_key.empty()) bad_token(item, "expected key=value, got");
                out.fields.push_back({Token{default_key, item.offset}, {}});
            }
            out.fields.back().second.push_back(to_int(item));
            continue;
        }
        Token key{item.text.substr(0, eq), item.offset};
        Token value{item.text.substr(eq + 1), item.offset + eq + 1};
        for (const auto& f : out.fields)
            if (f.first.text == key.text) bad_token(key, "duplicate key");
        out.fields.push_back({key, {to_int(value)}});
    }
    return out;
}

}  // namespace

bool looks_like_family_spec(std::string_view text) {
    return text.find(':') != std::string_view::npos || tag_named(text).has_value();
}

FamilyDescriptor parse_family_spec(std::string_view text) {
    const std::size_t colon = text.find(':');
    const Token tag_tok{text.substr(0, colon), 0};
    const std::optional<FamilyTag> tag = tag_named(tag_tok.text);
    if (!tag) bad_token(tag_tok, "unknown family tag");

    FamilyDescriptor d;
    d.tag = *tag;
    std::vector<Token> items;
    if (colon != std::string_view::npos) items = split_args(text.substr(colon + 1), colon + 1);
    const Token end_tok{"", text.size()};

    switch (d.tag) {
        case FamilyTag::Paw:
        case FamilyTag::Bull:
        case FamilyTag::Banner:
        case FamilyTag::BannerComplement:
        case FamilyTag::Butterfly:
        case FamilyTag::Corner:
        case FamilyTag::Fig6D:
            if (!items.empty()) bad_token(items.front(), "this family takes no arguments, got");
            break;
        case FamilyTag::Fig8D: {
            const KeyedArgs args = parse_keyed(items, "r");
            for (const auto& [key, values] : args.fields) {
                if (key.text != "r") bad_token(key, "unknown key");
                d.params = values;
            }
            if (d.params.empty()) bad_token(end_tok, "missing clique sizes");
            break;
        }
        case FamilyTag::Fig6E: {
            const KeyedArgs args = parse_keyed(items, "");
            std::optional<int> t;
            for (const auto& [key, values] : args.fields) {
                if (key.text == "t" || key.text == "tp") {
                    if (values.size() != 1) bad_token(key, "expected one value for");
                    if (key.text == "t") t = values.front();
                    else d.corners = values.front();
                } else if (key.text == "r") {
                    d.params = values;
                } else {
                    bad_token(key, "unknown key");
                }
            }
            if (t && *t != static_cast<int>(d.params.size()))
                bad_token(end_tok, "t does not match the number of clique sizes in");
            break;
        }
        default: {
            const std::size_t want =
                (d.tag == FamilyTag::CompleteBipartite || d.tag == FamilyTag::BiStar) ? 2 : 1;
            if (items.size() != want)
                bad_token(items.empty() ? end_tok : items.back(),
                          "expected " + std::to_string(want) + " integer argument(s), near");
            for (const Token& item : items) d.params.push_back(to_int(item));
        }
    }
    validate(d);
    return d;
}

std::string format_family_spec(const FamilyDescriptor& d) {
    std::string out(tag_name(d.tag));
    const auto list = [](const std::vector<int>& xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(xs[i]);
        }
        return s;
    };
    if (d.tag == FamilyTag::Fig6E) {
        out += ":t=" + std::to_string(d.params.size());
        if (!d.params.empty()) out += ",r=" + list(d.params);
        out += ";tp=" + std::to_string(d.corners);
    } else if (!d.params.empty()) {
        out += ':' + list(d.params);
    }
    return out;
}

}  // namespace locdom
