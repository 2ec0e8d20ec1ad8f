use super::Graph;
use crate::error::{Error, Result};

/// Builds a graph from a name:
///
/// * `K<n>` complete, `C<n>` cycle, `path<n>` / `P<n>` path,
/// * `K<a>,<b>[,<c>…]` complete multipartite (blocks labeled in order),
/// * `prism` (K₂ × K₃),
/// * `suspend(<name>)`,
/// * `delete(<name>, i-j)`.
pub fn make_named(spec: &str) -> Result<Graph> {
    let mut p = Parser { src: spec, pos: 0 };
    let g = p.graph()?;
    p.skip_ws();
    if p.pos != spec.len() {
        return Err(Error::parse(p.pos, "trailing input"));
    }
    Ok(g)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected `{tok}`")))
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(Error::parse(start, "expected a number"));
        }
        self.pos += len;
        let v: usize =
            self.src[start..self.pos].parse().map_err(|_| Error::parse(start, "number too large"))?;
        if v < 1 {
            return Err(Error::parse(start, "parameters must be at least 1"));
        }
        Ok(v)
    }

    fn graph(&mut self) -> Result<Graph> {
        self.skip_ws();
        let start = self.pos;
        if self.eat("suspend(") {
            let g = self.graph()?;
            self.expect(")")?;
            return Ok(g.suspend());
        }
        if self.eat("delete(") {
            let g = self.graph()?;
            self.expect(",")?;
            let i = self.number()?;
            self.expect("-")?;
            let j = self.number()?;
            self.expect(")")?;
            return g.delete_edge(i, j).map_err(|e| Error::parse(start, e.to_string()));
        }
        if self.eat("prism") {
            return Ok(Graph::prism());
        }
        if self.eat("path") || self.eat("P") {
            let n = self.number()?;
            return Ok(Graph::path(n));
        }
        if self.eat("C") {
            let n = self.number()?;
            if n < 3 {
                return Err(Error::parse(start, "cycles need at least 3 vertices"));
            }
            return Ok(Graph::cycle(n));
        }
        if self.eat("K") {
            let mut sizes = vec![self.number()?];
            // a comma followed by a digit continues the block list; a comma
            // followed by anything else belongs to an enclosing `delete(`
            loop {
                let save = self.pos;
                if self.eat(",") {
                    self.skip_ws();
                    if self.looks_like_block() {
                        sizes.push(self.number()?);
                        continue;
                    }
                }
                self.pos = save;
                break;
            }
            if sizes.iter().sum::<usize>() > crate::partition::MAX_VERTICES {
                return Err(Error::parse(start, "too many vertices"));
            }
            return Ok(if sizes.len() == 1 {
                Graph::complete(sizes[0])
            } else {
                Graph::complete_multipartite(&sizes)
            });
        }
        Err(Error::parse(start, "unknown graph name"))
    }

    /// After a comma inside `K…`: is the next token a block size (a number
    /// not followed by `-`)?
    fn looks_like_block(&self) -> bool {
        let r = self.rest();
        let len = r.bytes().take_while(u8::is_ascii_digit).count();
        len > 0 && !r[len..].trim_start().starts_with('-')
    }
}
