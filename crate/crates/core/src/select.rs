//! Subset selectors. Items are separated by `;` and unioned:
//!
//! * `hw`: the highest-weight element
//! * `f2 f2 f1 @hw`: lowering operators, rightmost applied first
//! * `id <raw>`: an element by id
//! * `demazure [2,1]`, `atom [2,1]`: by a word in node labels
//! * `ideal [[1],[2]]`: by generator words
//! * `all`

use crate::crystal::{CrystalGraph, ElemId};
use crate::demazure::{demazure_atom, demazure_crystal, ideal_subset};
use crate::error::{Error, Result};
use crate::io::ideal_from_words;
use crate::subset::{Provenance, SubsetHandle};

pub fn select<'g>(g: &'g CrystalGraph, selector: &str) -> Result<SubsetHandle<'g>> {
    let items: Vec<&str> = selector.split(';').map(str::trim).filter(|s| !s.is_empty()).collect();
    let mut out = SubsetHandle::new(g, []);
    let mut last = None;
    for item in &items {
        let (part, provenance) = select_item(g, item)?;
        out = out.union(&part);
        last = provenance;
    }
    let provenance = match (items.len(), last) {
        (1, Some(p)) => p,
        _ => Provenance::Selector(selector.trim().to_string()),
    };
    Ok(out.with_provenance(provenance))
}

fn parse_word(item: &str, text: &str) -> Result<Vec<u32>> {
    serde_json::from_str(text).map_err(|e| Error::Selector(format!("`{item}`: expected a word like [2,1]: {e}")))
}

fn select_item<'g>(g: &'g CrystalGraph, item: &str) -> Result<(SubsetHandle<'g>, Option<Provenance>)> {
    let (head, rest) = item.split_once(char::is_whitespace).unwrap_or((item, ""));
    let rest = rest.trim();
    let weyl = g.weyl();
    match head {
        "hw" if rest.is_empty() => Ok((SubsetHandle::new(g, [g.highest_weight()?]), None)),
        "all" if rest.is_empty() => Ok((SubsetHandle::whole(g), None)),
        "id" => {
            let b = g
                .find(rest)
                .ok_or_else(|| Error::Selector(format!("`{item}`: no element with id {rest}")))?;
            Ok((SubsetHandle::new(g, [b]), None))
        }
        "demazure" => {
            let w = weyl.element_from_labels(&parse_word(item, rest)?)?;
            let d = demazure_crystal(g, &w)?;
            let p = d.handle.provenance().clone();
            Ok((d.handle, Some(p)))
        }
        "atom" => {
            let w = weyl.element_from_labels(&parse_word(item, rest)?)?;
            let a = demazure_atom(g, &w)?;
            let p = a.handle.provenance().clone();
            Ok((a.handle, Some(p)))
        }
        "ideal" => {
            let words: Vec<Vec<u32>> = serde_json::from_str(rest)
                .map_err(|e| Error::Selector(format!("`{item}`: expected generators like [[1],[2]]: {e}")))?;
            let x = ideal_subset(g, &ideal_from_words(&weyl, &words)?)?;
            let p = x.provenance().clone();
            Ok((x, Some(p)))
        }
        _ => Ok((SubsetHandle::new(g, [path_element(g, item)?]), None)),
    }
}

fn path_element(g: &CrystalGraph, item: &str) -> Result<ElemId> {
    let tokens: Vec<&str> = item.split_whitespace().collect();
    let Some((&anchor, ops)) = tokens.split_last() else {
        return Err(Error::Selector("empty item".into()));
    };
    if anchor != "@hw" {
        return Err(Error::Selector(format!("`{item}`: unrecognized item")));
    }
    let mut path = Vec::with_capacity(ops.len());
    for op in ops {
        let label = op
            .strip_prefix('f')
            .and_then(|s| s.parse::<u32>().ok())
            .ok_or_else(|| Error::Selector(format!("`{item}`: expected f<i>, found `{op}`")))?;
        path.push(g.cartan().node(label)?);
    }
    let hw = g.highest_weight()?;
    g.apply_lowering(hw, &path).map_err(|step| {
        let at = g
            .apply_lowering(hw, &path[path.len() - step..])
            .expect("prefix defined");
        Error::Selector(format!(
            "`{item}`: step {} (f{}) is undefined at element {}",
            step + 1,
            g.cartan().label(path[path.len() - 1 - step]),
            g.id(at)
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::build_tableau_crystal;

    #[test]
    fn selector_examples() {
        let g = build_tableau_crystal(3, &[2, 1]).unwrap();
        let hw = g.highest_weight().unwrap();
        let x1 = select(&g, "hw; f1 @hw; f2 @hw").unwrap();
        assert_eq!(x1.len(), 3);
        assert!(x1.contains(g.f(1, hw).unwrap()));
        let d = select(&g, "demazure [2,1]").unwrap();
        assert_eq!(d.len(), 5);
        assert_eq!(d.provenance(), &Provenance::Demazure(vec![2, 1]));
        let b = select(&g, "f2 f2 f1 @hw").unwrap();
        let expect = g.f(1, g.f(1, g.f(0, hw).unwrap()).unwrap()).unwrap();
        assert_eq!(b.members().iter().copied().collect::<Vec<_>>(), vec![expect]);
        assert_eq!(select(&g, "all").unwrap().len(), 8);
        assert_eq!(select(&g, "ideal [[1],[2]]").unwrap(), x1);
        assert_eq!(select(&g, &format!("id {}", g.id(hw))).unwrap().len(), 1);
    }

    #[test]
    fn falling_off_names_the_step() {
        let g = build_tableau_crystal(3, &[2, 1]).unwrap();
        match select(&g, "f1 f1 @hw") {
            Err(Error::Selector(msg)) => assert!(msg.contains("step 2 (f1)"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(select(&g, "g1 @hw").is_err());
        assert!(select(&g, "f1 @lw").is_err());
        assert!(select(&g, "demazure 2,1").is_err());
        assert_eq!(select(&g, "f9 @hw").unwrap_err(), Error::UnknownNode(9));
    }
}
