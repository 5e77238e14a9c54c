#include "tableaux/tptp.hpp"

#include <cctype>

#include "tableaux/errors.hpp"

namespace tableaux {

std::string to_string(TptpRole role) {
  switch (role) {
    case TptpRole::Axiom:
      return "axiom";
    case TptpRole::Hypothesis:
      return "hypothesis";
    case TptpRole::Definition:
      return "definition";
    case TptpRole::Assumption:
      return "assumption";
    case TptpRole::Lemma:
      return "lemma";
    case TptpRole::Theorem:
      return "theorem";
    case TptpRole::Corollary:
      return "corollary";
    case TptpRole::Conjecture:
      return "conjecture";
    case TptpRole::NegatedConjecture:
      return "negated_conjecture";
    case TptpRole::Plain:
      return "plain";
    case TptpRole::Unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

std::optional<TptpRole> role_from_string(const std::string& word) {
  if (word == "axiom") return TptpRole::Axiom;
  if (word == "hypothesis") return TptpRole::Hypothesis;
  if (word == "definition") return TptpRole::Definition;
  if (word == "assumption") return TptpRole::Assumption;
  if (word == "lemma") return TptpRole::Lemma;
  if (word == "theorem") return TptpRole::Theorem;
  if (word == "corollary") return TptpRole::Corollary;
  if (word == "conjecture") return TptpRole::Conjecture;
  if (word == "negated_conjecture") return TptpRole::NegatedConjecture;
  if (word == "plain") return TptpRole::Plain;
  if (word == "unknown") return TptpRole::Unknown;
  return std::nullopt;
}

enum class Tok {
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Colon,
  Dot,
  Tilde,
  Amp,
  Vline,
  Imply,    // =>
  Iff,      // <=>
  RevImp,   // <=
  Xor,      // <~>
  NegAmp,   // ~&
  NegVline, // ~|
  Bang,
  Question,
  Equal,
  NotEqual,
  LowerWord,
  UpperWord,
  Integer,
  Quoted,
  DollarWord,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view input) : input_(input) {}

  Token next() {
    skip_blank();
    std::size_t line = line_, column = column_;
    if (done()) return {Tok::End, "", line, column};
    char c = peek();
    switch (c) {
      case '(':
        bump();
        return {Tok::LParen, "(", line, column};
      case ')':
        bump();
        return {Tok::RParen, ")", line, column};
      case '[':
        bump();
        return {Tok::LBracket, "[", line, column};
      case ']':
        bump();
        return {Tok::RBracket, "]", line, column};
      case ',':
        bump();
        return {Tok::Comma, ",", line, column};
      case ':':
        bump();
        return {Tok::Colon, ":", line, column};
      case '.':
        bump();
        return {Tok::Dot, ".", line, column};
      case '&':
        bump();
        return {Tok::Amp, "&", line, column};
      case '|':
        bump();
        return {Tok::Vline, "|", line, column};
      case '?':
        bump();
        return {Tok::Question, "?", line, column};
      case '~':
        bump();
        if (!done() && peek() == '&') {
          bump();
          return {Tok::NegAmp, "~&", line, column};
        }
        if (!done() && peek() == '|') {
          bump();
          return {Tok::NegVline, "~|", line, column};
        }
        return {Tok::Tilde, "~", line, column};
      case '!':
        bump();
        if (!done() && peek() == '=') {
          bump();
          return {Tok::NotEqual, "!=", line, column};
        }
        return {Tok::Bang, "!", line, column};
      case '=':
        bump();
        if (!done() && peek() == '>') {
          bump();
          return {Tok::Imply, "=>", line, column};
        }
        return {Tok::Equal, "=", line, column};
      case '<':
        bump();
        if (!done() && peek() == '=') {
          bump();
          if (!done() && peek() == '>') {
            bump();
            return {Tok::Iff, "<=>", line, column};
          }
          return {Tok::RevImp, "<=", line, column};
        }
        if (!done() && peek() == '~') {
          bump();
          if (!done() && peek() == '>') {
            bump();
            return {Tok::Xor, "<~>", line, column};
          }
          throw ParseError(line, column, "'<~>'");
        }
        throw ParseError(line, column, "'<=>', '<=' or '<~>'");
      case '\'': {
        bump();
        std::string text;
        while (!done() && peek() != '\'') {
          if (peek() == '\\') {
            bump();
            if (done()) throw ParseError(line_, column_, "an escaped character");
          }
          text.push_back(peek());
          bump();
        }
        if (done()) throw ParseError(line, column, "a closing quote");
        bump();
        return {Tok::Quoted, std::move(text), line, column};
      }
      case '$': {
        bump();
        std::string text = "$";
        while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
          text.push_back(peek());
          bump();
        }
        return {Tok::DollarWord, std::move(text), line, column};
      }
      default:
        break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text;
      while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
        text.push_back(peek());
        bump();
      }
      return {Tok::Integer, std::move(text), line, column};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string text;
      while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
        text.push_back(peek());
        bump();
      }
      bool upper = std::isupper(static_cast<unsigned char>(text[0]));
      return {upper ? Tok::UpperWord : Tok::LowerWord, std::move(text), line, column};
    }
    throw ParseError(line, column, "a token");
  }

 private:
  bool done() const { return pos_ >= input_.size(); }
  char peek() const { return input_[pos_]; }

  void bump() {
    if (input_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (!done()) {
      char c = peek();
      if (c == '%') {
        while (!done() && peek() != '\n') bump();
      } else if (c == '/' && pos_ + 1 < input_.size() && input_[pos_ + 1] == '*') {
        std::size_t line = line_, column = column_;
        bump();
        bump();
        while (true) {
          if (done()) throw ParseError(line, column, "a closing '*/'");
          if (peek() == '*' && pos_ + 1 < input_.size() && input_[pos_ + 1] == '/') {
            bump();
            bump();
            break;
          }
          bump();
        }
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        bump();
      } else {
        return;
      }
    }
  }

  std::string_view input_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view input) : lexer_(input) { shift(); }

  TptpProblem parse_problem() {
    TptpProblem out;
    while (current_.kind != Tok::End) out.units.push_back(parse_unit());
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) {
    throw ParseError(current_.line, current_.column, expected);
  }

  [[noreturn]] void unsupported(const std::string& feature) {
    throw UnsupportedFeature(current_.line, current_.column, feature);
  }

  void shift() { current_ = lexer_.next(); }

  void expect(Tok kind, const char* what) {
    if (current_.kind != kind) fail(what);
    shift();
  }

  TptpUnit parse_unit() {
    if (current_.kind != Tok::LowerWord) fail("'fof'");
    if (current_.text == "include") unsupported("include directives");
    if (current_.text == "cnf" || current_.text == "tff" || current_.text == "thf" ||
        current_.text == "tcf")
      unsupported(current_.text + " units");
    if (current_.text != "fof") fail("'fof'");
    shift();
    expect(Tok::LParen, "'('");
    TptpUnit unit{"", TptpRole::Axiom, EForm::bot()};
    if (current_.kind == Tok::LowerWord || current_.kind == Tok::Integer ||
        current_.kind == Tok::Quoted) {
      unit.name = current_.text;
      shift();
    } else {
      fail("a unit name");
    }
    expect(Tok::Comma, "','");
    if (current_.kind != Tok::LowerWord) fail("a role");
    std::optional<TptpRole> role = role_from_string(current_.text);
    if (!role) fail("a formula role");
    unit.role = *role;
    shift();
    expect(Tok::Comma, "','");
    unit.formula = parse_logic_formula();
    expect(Tok::RParen, "')'");
    expect(Tok::Dot, "'.'");
    return unit;
  }

  EForm parse_logic_formula() {
    EForm first = parse_unitary();
    switch (current_.kind) {
      case Tok::Amp: {
        EForm out = first;
        while (current_.kind == Tok::Amp) {
          shift();
          out = EForm::conj(std::move(out), parse_unitary());
        }
        return out;
      }
      case Tok::Vline: {
        EForm out = first;
        while (current_.kind == Tok::Vline) {
          shift();
          out = EForm::disj(std::move(out), parse_unitary());
        }
        return out;
      }
      case Tok::Imply: {
        shift();
        return EForm::imp(std::move(first), parse_unitary());
      }
      case Tok::Iff: {
        shift();
        return EForm::iff(std::move(first), parse_unitary());
      }
      case Tok::RevImp: {
        shift();
        EForm lhs = parse_unitary();
        return EForm::imp(std::move(lhs), std::move(first));
      }
      case Tok::Xor: {
        shift();
        return EForm::neg(EForm::iff(std::move(first), parse_unitary()));
      }
      case Tok::NegAmp:
      case Tok::NegVline:
        unsupported("connective " + current_.text);
      default:
        return first;
    }
  }

  EForm parse_unitary() {
    switch (current_.kind) {
      case Tok::Tilde:
        shift();
        return EForm::neg(parse_unitary());
      case Tok::Bang:
      case Tok::Question: {
        bool universal = current_.kind == Tok::Bang;
        shift();
        expect(Tok::LBracket, "'['");
        std::vector<std::string> vars;
        while (true) {
          if (current_.kind != Tok::UpperWord) fail("a variable");
          vars.push_back(current_.text);
          shift();
          if (current_.kind == Tok::Comma) {
            shift();
            continue;
          }
          break;
        }
        expect(Tok::RBracket, "']'");
        expect(Tok::Colon, "':'");
        EForm body = parse_unitary();
        for (std::size_t i = vars.size(); i-- > 0;)
          body = universal ? EForm::all(vars[i], std::move(body))
                           : EForm::ex(vars[i], std::move(body));
        return body;
      }
      case Tok::LParen: {
        shift();
        EForm out = parse_logic_formula();
        expect(Tok::RParen, "')'");
        return out;
      }
      case Tok::DollarWord: {
        if (current_.text == "$true") {
          shift();
          return EForm::top();
        }
        if (current_.text == "$false") {
          shift();
          return EForm::bot();
        }
        unsupported("defined symbol " + current_.text);
      }
      case Tok::LowerWord: {
        std::string symbol = current_.text;
        shift();
        std::vector<ETerm> args;
        if (current_.kind == Tok::LParen) {
          shift();
          while (true) {
            args.push_back(parse_term());
            if (current_.kind == Tok::Comma) {
              shift();
              continue;
            }
            break;
          }
          expect(Tok::RParen, "')'");
        }
        if (current_.kind == Tok::Equal || current_.kind == Tok::NotEqual)
          unsupported("equality");
        return EForm::pred(std::move(symbol), std::move(args));
      }
      case Tok::UpperWord:
      case Tok::Integer:
        // A bare term in formula position only makes sense left of '='.
        unsupported("equality");
      default:
        fail("a formula");
    }
  }

  ETerm parse_term() {
    switch (current_.kind) {
      case Tok::UpperWord: {
        ETerm out = ETerm::var(current_.text);
        shift();
        return out;
      }
      case Tok::LowerWord: {
        std::string symbol = current_.text;
        shift();
        std::vector<ETerm> args;
        if (current_.kind == Tok::LParen) {
          shift();
          while (true) {
            args.push_back(parse_term());
            if (current_.kind == Tok::Comma) {
              shift();
              continue;
            }
            break;
          }
          expect(Tok::RParen, "')'");
        }
        return ETerm::fun(std::move(symbol), std::move(args));
      }
      case Tok::Integer:
        unsupported("numeric terms");
      case Tok::DollarWord:
        unsupported("defined symbol " + current_.text);
      default:
        fail("a term");
    }
  }

  Lexer lexer_;
  Token current_{Tok::End, "", 0, 0};
};

bool is_lower_word(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

bool is_integer_word(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string print_unit_name(const std::string& name) {
  if (is_lower_word(name) || is_integer_word(name)) return name;
  std::string out = "'";
  for (char c : name) {
    if (c == '\'' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('\'');
  return out;
}

void print_eterm(const ETerm& t, std::string& out) {
  out += t.kind() == ETermKind::Var ? t.name() : t.symbol();
  if (t.kind() == ETermKind::Fun && !t.args().empty()) {
    out.push_back('(');
    for (std::size_t i = 0; i < t.args().size(); ++i) {
      if (i > 0) out.push_back(',');
      print_eterm(t.args()[i], out);
    }
    out.push_back(')');
  }
}

bool is_binary(EFormKind kind) {
  return kind == EFormKind::And || kind == EFormKind::Or || kind == EFormKind::Imp ||
         kind == EFormKind::Iff;
}

void print_eform(const EForm& f, std::string& out);

// Prints in a position that requires a unitary formula, wrapping binary
// connectives in parentheses.
void print_unitary(const EForm& f, std::string& out) {
  if (is_binary(f.kind())) {
    out.push_back('(');
    print_eform(f, out);
    out.push_back(')');
    return;
  }
  print_eform(f, out);
}

void print_eform(const EForm& f, std::string& out) {
  switch (f.kind()) {
    case EFormKind::Bot:
      out += "$false";
      return;
    case EFormKind::Top:
      out += "$true";
      return;
    case EFormKind::Pred: {
      out += f.symbol();
      if (!f.args().empty()) {
        out.push_back('(');
        for (std::size_t i = 0; i < f.args().size(); ++i) {
          if (i > 0) out.push_back(',');
          print_eterm(f.args()[i], out);
        }
        out.push_back(')');
      }
      return;
    }
    case EFormKind::Neg:
      out.push_back('~');
      print_unitary(f.child(), out);
      return;
    case EFormKind::And:
    case EFormKind::Or:
    case EFormKind::Imp:
    case EFormKind::Iff: {
      print_unitary(f.left(), out);
      switch (f.kind()) {
        case EFormKind::And:
          out += " & ";
          break;
        case EFormKind::Or:
          out += " | ";
          break;
        case EFormKind::Imp:
          out += " => ";
          break;
        default:
          out += " <=> ";
          break;
      }
      print_unitary(f.right(), out);
      return;
    }
    case EFormKind::All:
    case EFormKind::Ex:
      out += f.kind() == EFormKind::All ? "! [" : "? [";
      out += f.var();
      out += "] : ";
      print_unitary(f.body(), out);
      return;
  }
}

}  // namespace

TptpProblem parse_tptp(std::string_view input) { return Parser(input).parse_problem(); }

std::string print_tptp(const TptpProblem& problem) {
  std::string out;
  for (const TptpUnit& unit : problem.units) {
    out += "fof(" + print_unit_name(unit.name) + ", " + to_string(unit.role) + ", ";
    print_eform(unit.formula, out);
    out += ").\n";
  }
  return out;
}

std::vector<Form> assemble_context(const TptpProblem& problem) {
  const TptpUnit* conjecture = nullptr;
  for (const TptpUnit& unit : problem.units) {
    if (unit.role == TptpRole::Conjecture) {
      if (conjecture) throw MultipleConjectures();
      conjecture = &unit;
    }
  }
  std::vector<Form> out;
  if (conjecture) out.push_back(Form::neg(translate_eform(conjecture->formula)));
  for (const TptpUnit& unit : problem.units)
    if (&unit != conjecture) out.push_back(translate_eform(unit.formula));
  return out;
}

EForm gen_phi(std::size_t n) {
  if (n == 0) throw Error("the family starts at 1");
  std::optional<EForm> body;
  for (std::size_t i = n; i >= 1; --i) {
    std::string index = std::to_string(i);
    std::string pred = "p" + index;
    EForm disjunct = EForm::conj(
        EForm::neg(EForm::pred(pred, {ETerm::var("X" + index)})),
        EForm::ex("Y" + index, EForm::pred(pred, {ETerm::var("Y" + index)})));
    body = body ? EForm::disj(std::move(disjunct), std::move(*body)) : std::move(disjunct);
  }
  EForm out = std::move(*body);
  for (std::size_t i = n; i >= 1; --i) out = EForm::all("X" + std::to_string(i), std::move(out));
  return out;
}

TptpProblem gen_phi_problem(std::size_t n) {
  return {{TptpUnit{"phi" + std::to_string(n), TptpRole::Axiom, gen_phi(n)}}};
}

}  // namespace tableaux
