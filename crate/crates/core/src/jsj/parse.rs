use std::collections::HashMap;

use num_integer::Integer;

use super::{JsjError, JsjErrorKind, JsjTree, Piece, PieceKind};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Str(String),
    Int(u64),
    Sym(&'static str),
    Eof,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn err(line: usize, column: usize, kind: JsjErrorKind) -> JsjError {
    JsjError { line, column, kind }
}

fn lex(text: &str) -> Result<Vec<Token>, JsjError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1usize, 1usize);
    macro_rules! bump {
        () => {{
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else if c.is_some() {
                column += 1;
            }
            c
        }};
    }
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let push = |out: &mut Vec<Token>, tok| out.push(Token { tok, line: l, column: col });
        if c.is_whitespace() {
            bump!();
        } else if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                bump!();
            }
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while chars.peek().is_some_and(|&c| c.is_ascii_alphanumeric() || c == '_') {
                s.push(bump!().unwrap());
            }
            push(&mut out, Tok::Ident(s));
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while chars.peek().is_some_and(|c| c.is_ascii_digit()) {
                s.push(bump!().unwrap());
            }
            let n = s
                .parse()
                .map_err(|_| err(l, col, JsjErrorKind::Syntax(format!("integer `{s}` is too large"))))?;
            push(&mut out, Tok::Int(n));
        } else if c == '"' {
            bump!();
            let mut s = String::new();
            loop {
                match bump!() {
                    None => return Err(err(l, col, JsjErrorKind::Syntax("unterminated string".into()))),
                    Some('"') => break,
                    Some('\\') => match bump!() {
                        Some('"') => s.push('"'),
                        Some('\\') => s.push('\\'),
                        Some('n') => s.push('\n'),
                        _ => {
                            return Err(err(line, column, JsjErrorKind::Syntax("bad escape in string".into())))
                        }
                    },
                    Some(c) => s.push(c),
                }
            }
            push(&mut out, Tok::Str(s));
        } else if c == '-' {
            bump!();
            if chars.peek() == Some(&'-') {
                bump!();
                push(&mut out, Tok::Sym("--"));
            } else {
                return Err(err(l, col, JsjErrorKind::Syntax("expected `--`".into())));
            }
        } else {
            let sym = match c {
                '{' => "{",
                '}' => "}",
                '(' => "(",
                ')' => ")",
                ',' => ",",
                ';' => ";",
                '=' => "=",
                _ => return Err(err(l, col, JsjErrorKind::Syntax(format!("unexpected character `{c}`")))),
            };
            bump!();
            push(&mut out, Tok::Sym(sym));
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn syntax(&self, tok: &Token, expected: &str) -> JsjError {
        let found = match &tok.tok {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Str(s) => format!("string \"{s}\""),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Sym(s) => format!("`{s}`"),
            Tok::Eof => "end of input".to_string(),
        };
        err(tok.line, tok.column, JsjErrorKind::Syntax(format!("expected {expected}, found {found}")))
    }

    fn sym(&mut self, s: &'static str) -> Result<Token, JsjError> {
        let t = self.next();
        if t.tok == Tok::Sym(s) {
            Ok(t)
        } else {
            Err(self.syntax(&t, &format!("`{s}`")))
        }
    }

    fn keyword(&mut self, k: &str) -> Result<Token, JsjError> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) if s == k => Ok(t),
            _ => Err(self.syntax(&t, &format!("`{k}`"))),
        }
    }

    fn ident(&mut self) -> Result<(String, Token), JsjError> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) => Ok((s.clone(), t.clone())),
            _ => Err(self.syntax(&t, "an identifier")),
        }
    }

    fn string(&mut self) -> Result<String, JsjError> {
        let t = self.next();
        match &t.tok {
            Tok::Str(s) => Ok(s.clone()),
            _ => Err(self.syntax(&t, "a string")),
        }
    }

    fn int(&mut self) -> Result<u64, JsjError> {
        let t = self.next();
        match t.tok {
            Tok::Int(n) => Ok(n),
            _ => Err(self.syntax(&t, "an integer")),
        }
    }

    fn int_pair(&mut self) -> Result<(u64, u64), JsjError> {
        self.sym("(")?;
        let p = self.int()?;
        self.sym(",")?;
        let q = self.int()?;
        self.sym(")")?;
        Ok((p, q))
    }

    fn kind(&mut self) -> Result<PieceKind, JsjError> {
        let (name, tok) = self.ident()?;
        let invalid = |msg: String| err(tok.line, tok.column, JsjErrorKind::InvalidParameters(msg));
        let kind = match name.as_str() {
            "torus_knot" => {
                let (p, q) = self.int_pair()?;
                if p < 2 || q < 2 || p.gcd(&q) != 1 {
                    return Err(invalid(format!(
                        "torus_knot({p}, {q}) needs coprime p, q >= 2"
                    )));
                }
                PieceKind::TorusKnot { p, q }
            }
            "cable" => {
                let (p, q) = self.int_pair()?;
                if p < 2 || q < 1 || p.gcd(&q) != 1 {
                    return Err(invalid(format!(
                        "cable({p}, {q}) needs p >= 2, q >= 1, coprime"
                    )));
                }
                PieceKind::Cable { p, q }
            }
            "composing" => {
                self.sym("(")?;
                let strands = self.int()?;
                self.sym(")")?;
                if strands < 3 {
                    return Err(invalid(format!("composing({strands}) needs at least 3 boundary components")));
                }
                PieceKind::Composing { strands }
            }
            "hyperbolic" => {
                self.sym("(")?;
                let label = self.string()?;
                self.sym(")")?;
                PieceKind::Hyperbolic { label }
            }
            "torus_i" => PieceKind::TorusI,
            _ => return Err(self.syntax(&tok, "a piece kind")),
        };
        Ok(kind)
    }
}

pub fn parse_jsj(text: &str) -> Result<JsjTree, JsjError> {
    let mut parser = Parser {
        tokens: lex(text)?,
        pos: 0,
    };
    parser.keyword("knot")?;
    let name = parser.string()?;
    parser.sym("{")?;

    let mut pieces: Vec<Piece> = Vec::new();
    let mut piece_pos: HashMap<String, (usize, usize)> = HashMap::new();
    let mut glues: Vec<(String, Token, String, Token)> = Vec::new();
    let mut root: Option<(String, Token)> = None;

    loop {
        let t = parser.peek().clone();
        match &t.tok {
            Tok::Sym("}") => {
                parser.next();
                break;
            }
            Tok::Ident(k) if k == "piece" => {
                parser.next();
                let (id, id_tok) = parser.ident()?;
                parser.sym("=")?;
                let kind = parser.kind()?;
                parser.sym(";")?;
                if piece_pos.contains_key(&id) {
                    return Err(err(id_tok.line, id_tok.column, JsjErrorKind::DuplicateId(id)));
                }
                piece_pos.insert(id.clone(), (id_tok.line, id_tok.column));
                pieces.push(Piece { id, kind });
            }
            Tok::Ident(k) if k == "glue" => {
                parser.next();
                let (a, a_tok) = parser.ident()?;
                parser.sym("--")?;
                let (b, b_tok) = parser.ident()?;
                parser.sym(";")?;
                glues.push((a, a_tok, b, b_tok));
            }
            Tok::Ident(k) if k == "root" => {
                parser.next();
                let (id, id_tok) = parser.ident()?;
                parser.sym(";")?;
                if root.is_some() {
                    return Err(err(t.line, t.column, JsjErrorKind::DuplicateRoot));
                }
                root = Some((id, id_tok));
            }
            _ => return Err(parser.syntax(&t, "`piece`, `glue`, `root` or `}`")),
        }
    }
    let end = parser.next();
    if end.tok != Tok::Eof {
        return Err(parser.syntax(&end, "end of input"));
    }

    if pieces.is_empty() {
        return Err(err(end.line, end.column, JsjErrorKind::Empty));
    }
    let (root, root_tok) = root.ok_or_else(|| err(end.line, end.column, JsjErrorKind::MissingRoot))?;
    if !piece_pos.contains_key(&root) {
        return Err(err(root_tok.line, root_tok.column, JsjErrorKind::UnknownId(root)));
    }

    // union-find over piece indices detects cycles edge by edge
    let index: HashMap<&str, usize> = pieces.iter().enumerate().map(|(i, p)| (p.id.as_str(), i)).collect();
    let mut parent: Vec<usize> = (0..pieces.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut edges = Vec::with_capacity(glues.len());
    for (a, a_tok, b, b_tok) in &glues {
        let ia = *index
            .get(a.as_str())
            .ok_or_else(|| err(a_tok.line, a_tok.column, JsjErrorKind::UnknownId(a.clone())))?;
        let ib = *index
            .get(b.as_str())
            .ok_or_else(|| err(b_tok.line, b_tok.column, JsjErrorKind::UnknownId(b.clone())))?;
        if ia == ib {
            return Err(err(a_tok.line, a_tok.column, JsjErrorKind::SelfGlue(a.clone())));
        }
        let (ra, rb) = (find(&mut parent, ia), find(&mut parent, ib));
        if ra == rb {
            return Err(err(a_tok.line, a_tok.column, JsjErrorKind::Cycle(a.clone(), b.clone())));
        }
        parent[ra] = rb;
        let edge = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        edges.push(edge);
    }
    let root_class = find(&mut parent, index[root.as_str()]);
    for (i, piece) in pieces.iter().enumerate() {
        if find(&mut parent, i) != root_class {
            let (line, column) = piece_pos[&piece.id];
            return Err(err(line, column, JsjErrorKind::Disconnected(piece.id.clone())));
        }
    }

    Ok(JsjTree {
        name,
        pieces,
        edges,
        root,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_pieces() {
        let t = parse_jsj(r#"knot "fig8" { piece X = hyperbolic("fig8"); root X; }"#).unwrap();
        assert_eq!(t.pieces.len(), 1);
        assert_eq!(t.pieces[0].kind, PieceKind::Hyperbolic { label: "fig8".into() });
        let t = parse_jsj("knot \"trefoil\" {\n  piece T = torus_knot(2, 3); # the whole exterior\n  root T;\n}\n").unwrap();
        assert_eq!(t.pieces[0].kind, PieceKind::TorusKnot { p: 2, q: 3 });
        assert_eq!(t.root, "T");
    }

    #[test]
    fn cable_of_trefoil() {
        let text = r#"
            knot "cable of trefoil" {
                piece C = cable(2, 5);
                piece T = torus_knot(2, 3);
                glue T -- C;
                root C;
            }
        "#;
        let t = parse_jsj(text).unwrap();
        assert_eq!(t.pieces.len(), 2);
        assert_eq!(t.edges, vec![("C".to_string(), "T".to_string())]);
    }

    fn error_kind(text: &str) -> (usize, usize, JsjErrorKind) {
        let e = parse_jsj(text).unwrap_err();
        (e.line, e.column, e.kind)
    }

    #[test]
    fn structural_errors() {
        let (_, _, k) = error_kind(r#"knot "x" { piece A = torus_i; piece A = torus_i; root A; }"#);
        assert_eq!(k, JsjErrorKind::DuplicateId("A".into()));
        let (_, _, k) = error_kind(r#"knot "x" { piece A = torus_i; piece B = torus_i; root A; }"#);
        assert_eq!(k, JsjErrorKind::Disconnected("B".into()));
        let (_, _, k) = error_kind(
            r#"knot "x" { piece A = torus_i; piece B = torus_i; glue A -- B; glue B -- A; root A; }"#,
        );
        assert_eq!(k, JsjErrorKind::Cycle("B".into(), "A".into()));
        let (_, _, k) = error_kind(r#"knot "x" { piece A = torus_i; }"#);
        assert_eq!(k, JsjErrorKind::MissingRoot);
        let (_, _, k) = error_kind(r#"knot "x" { piece A = torus_i; root A; root A; }"#);
        assert_eq!(k, JsjErrorKind::DuplicateRoot);
        let (_, _, k) = error_kind(r#"knot "x" { piece A = torus_i; root B; }"#);
        assert_eq!(k, JsjErrorKind::UnknownId("B".into()));
        let (_, _, k) = error_kind(r#"knot "x" { piece A = torus_i; glue A -- A; root A; }"#);
        assert_eq!(k, JsjErrorKind::SelfGlue("A".into()));
        let (_, _, k) = error_kind(r#"knot "x" { }"#);
        assert_eq!(k, JsjErrorKind::Empty);
    }

    #[test]
    fn parameter_errors() {
        for text in [
            r#"knot "x" { piece A = torus_knot(2, 4); root A; }"#,
            r#"knot "x" { piece A = torus_knot(1, 3); root A; }"#,
            r#"knot "x" { piece A = cable(3, 0); root A; }"#,
            r#"knot "x" { piece A = composing(2); root A; }"#,
        ] {
            assert!(matches!(error_kind(text).2, JsjErrorKind::InvalidParameters(_)), "{text}");
        }
    }

    #[test]
    fn syntax_errors_have_positions() {
        let (line, column, k) = error_kind("knot \"x\" {\n  piece A = torus_knot(2 3);\n  root A;\n}");
        assert_eq!((line, column), (2, 26));
        assert!(matches!(k, JsjErrorKind::Syntax(_)));
        let (line, column, _) = error_kind("knot \"x\" {\n  piece A = moebius;\n}");
        assert_eq!((line, column), (2, 13));
        let (line, column, _) = error_kind("knot x {}");
        assert_eq!((line, column), (1, 6));
        let (line, column, _) = error_kind("knot \"x\" { glue A - B; }");
        assert_eq!((line, column), (1, 19));
        let (_, _, k) = error_kind("knot \"unterminated { }");
        assert!(matches!(k, JsjErrorKind::Syntax(_)));
    }

    #[test]
    fn round_trip_through_display() {
        let text = r#"
            knot "a \"quoted\" name" {
                piece R = composing(3);
                piece H1 = hyperbolic("5_2");
                piece H2 = hyperbolic("fig8");
                piece T = torus_i;
                glue R -- H1;
                glue H2 -- R;
                glue T -- H2;
                root R;
            }
        "#;
        let tree = parse_jsj(text).unwrap();
        let printed = tree.to_string();
        assert_eq!(parse_jsj(&printed).unwrap(), tree);
    }
}
