//! Recursive-descent parser for bundle expressions.
//!
//! ```text
//! sum     := product ('+' product)*
//! product := postfix ('*' postfix)*
//! postfix := primary ('(' int ')')*
//! primary := 'E' list | 'V' list | 'O' | '(' sum ')'
//!          | 'wedge' '^' uint '(' sum ')' | 'sym' '^' uint '(' sum ')'
//!          | 'dual' '(' sum ')' | 'gr' '(' sum ')'
//! list    := '[' int (',' int)* ']'
//! ```
//!
//! Whitespace is skipped between tokens. Error positions are byte offsets.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::BundleExpr;
use crate::error::{Error, Result};
use crate::lie::Weight;

pub fn parse_expr(text: &str) -> Result<BundleExpr> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.sum()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return p.fail("end of input");
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn fail<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            expected: expected.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(&alloc::format!("`{}`", c as char))
        }
    }

    fn keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        let end = self.pos + kw.len();
        if self.src.get(self.pos..end) == Some(kw.as_bytes()) {
            self.pos = end;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<i32> {
        self.skip_ws();
        let start = self.pos;
        let neg = self.src.get(self.pos) == Some(&b'-');
        if neg {
            self.pos += 1;
        }
        let digits = self.pos;
        let mut v: i64 = 0;
        while let Some(d) = self.src.get(self.pos).filter(|c| c.is_ascii_digit()) {
            v = v * 10 + i64::from(d - b'0');
            if v > i64::from(i32::MAX) + 1 {
                self.pos = start;
                return self.fail("integer in i32 range");
            }
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return self.fail("integer");
        }
        let v = if neg { -v } else { v };
        i32::try_from(v).or_else(|_| {
            self.pos = start;
            self.fail("integer in i32 range")
        })
    }

    fn uint(&mut self) -> Result<u32> {
        let start = self.pos;
        let v = self.int()?;
        u32::try_from(v).or_else(|_| {
            self.pos = start;
            self.fail("nonnegative integer")
        })
    }

    fn list(&mut self) -> Result<Weight> {
        self.expect(b'[')?;
        let mut coords: Vec<i32> = Vec::new();
        loop {
            coords.push(self.int()?);
            if self.eat(b']') {
                return Ok(Weight::from(coords));
            }
            if !self.eat(b',') {
                return self.fail("`,` or `]`");
            }
        }
    }

    fn sum(&mut self) -> Result<BundleExpr> {
        let first = self.product()?;
        let mut items = alloc::vec![first];
        while self.eat(b'+') {
            items.push(self.product()?);
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            BundleExpr::Oplus(items)
        })
    }

    fn product(&mut self) -> Result<BundleExpr> {
        let mut acc = self.postfix()?;
        while self.eat(b'*') {
            let rhs = self.postfix()?;
            acc = BundleExpr::Tensor(acc.into(), rhs.into());
        }
        Ok(acc)
    }

    fn postfix(&mut self) -> Result<BundleExpr> {
        let mut e = self.primary()?;
        while self.eat(b'(') {
            let t = self.int()?;
            self.expect(b')')?;
            e = BundleExpr::Twist(e.into(), t);
        }
        Ok(e)
    }

    fn call(&mut self) -> Result<BundleExpr> {
        self.expect(b'(')?;
        let e = self.sum()?;
        self.expect(b')')?;
        Ok(e)
    }

    fn power(&mut self) -> Result<(u32, BundleExpr)> {
        self.expect(b'^')?;
        let k = self.uint()?;
        Ok((k, self.call()?))
    }

    fn primary(&mut self) -> Result<BundleExpr> {
        match self.peek() {
            Some(b'E') => {
                self.pos += 1;
                Ok(BundleExpr::Irr(self.list()?))
            }
            Some(b'V') => {
                self.pos += 1;
                Ok(BundleExpr::Rep(self.list()?))
            }
            Some(b'O') => {
                self.pos += 1;
                Ok(BundleExpr::Triv)
            }
            Some(b'(') => self.call(),
            _ if self.keyword("wedge") => self.power().map(|(k, e)| BundleExpr::Wedge(k, e.into())),
            _ if self.keyword("sym") => self.power().map(|(k, e)| BundleExpr::Sym(k, e.into())),
            _ if self.keyword("dual") => self.call().map(|e| BundleExpr::Dual(e.into())),
            _ if self.keyword("gr") => self.call().map(|e| BundleExpr::Gr(e.into())),
            _ => self.fail(EXPECTED_TERM),
        }
    }
}

const EXPECTED_TERM: &str = "`E[`, `V[`, `O`, `(`, `wedge^`, `sym^`, `dual(` or `gr(`";

/// Splits `"lhs == rhs"` for the textual identity form.
pub fn split_iso(text: &str) -> Option<(String, String)> {
    let (l, r) = text.split_once("==")?;
    Some((l.trim().to_string(), r.trim().to_string()))
}
