//! Buchberger engine for ideals and for submodules of free modules:
//! normal forms, reduced bases, elimination, syzygies, and the
//! auxiliary-variable intersection.
//!
//! Ideals are handled as rank-1 submodules so one engine serves both.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::freemod::{vec_lead, FreeModule, FreeVec, ModOrder};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Poly, Ring};

/// A computed Gröbner basis: monic, inter-reduced, deterministically sorted.
#[derive(Debug, Clone)]
pub struct GBasis {
    pub module: FreeModule,
    pub ord: ModOrder,
    pub gens: Vec<FreeVec>,
}

impl GBasis {
    pub fn ring(&self) -> &Ring {
        &self.module.ring
    }

    pub fn normal_form(&self, v: &FreeVec) -> Result<FreeVec> {
        if v.rank() != self.module.rank() {
            return Err(Error::RankMismatch(v.rank(), self.module.rank()));
        }
        Ok(normal_form_vec(v, &self.gens, self.ring(), &self.ord))
    }

    pub fn contains(&self, v: &FreeVec) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    pub fn lead_terms(&self) -> Vec<(usize, Monomial)> {
        self.gens
            .iter()
            .filter_map(|g| vec_lead(g, self.ring(), &self.ord).map(|(p, m, _)| (p, m.clone())))
            .collect()
    }
}

/// Full normal form: the result has no term (in any component) divisible by a
/// lead term of `gens` in the same component. Deterministic for a fixed
/// generator ordering.
pub fn normal_form_vec(v: &FreeVec, gens: &[FreeVec], ring: &Ring, ord: &ModOrder) -> FreeVec {
    let field = ring.field().clone();
    let rank = v.rank();
    let mut cur = v.clone();
    let mut rem_terms: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); rank];

    let leads: Vec<(usize, Monomial, Coeff)> = gens
        .iter()
        .filter_map(|g| vec_lead(g, ring, ord).map(|(p, m, c)| (p, m.clone(), c.clone())))
        .collect();

    'outer: loop {
        let Some((pos, m, c)) = vec_lead(&cur, ring, ord).map(|(p, m, c)| (p, m.clone(), c.clone()))
        else {
            break;
        };
        for (gi, (gp, gm, gc)) in leads.iter().enumerate() {
            if *gp == pos && gm.divides(&m) {
                let factor = field.div(&c, gc).expect("lead coefficient is nonzero");
                let qm = m.div(gm);
                cur = cur
                    .sub(&gens[gi].term_mul(&qm, &factor))
                    .expect("ranks match");
                continue 'outer;
            }
        }
        // irreducible lead: move it to the remainder
        rem_terms[pos].push((m.clone(), c.clone()));
        let strip = FreeVec {
            comps: (0..rank)
                .map(|i| {
                    if i == pos {
                        Poly::from_terms(ring, vec![(m.clone(), c.clone())])
                    } else {
                        ring.zero()
                    }
                })
                .collect(),
        };
        cur = cur.sub(&strip).expect("ranks match");
    }

    FreeVec {
        comps: rem_terms
            .into_iter()
            .map(|t| Poly::from_terms(ring, t))
            .collect(),
    }
}

/// The S-vector of two elements with lead terms in the same component;
/// `None` when the lead components differ (no pair).
pub fn s_vector(f: &FreeVec, g: &FreeVec, ring: &Ring, ord: &ModOrder) -> Option<FreeVec> {
    let (pf, mf, cf) = vec_lead(f, ring, ord)?;
    let (pg, mg, cg) = vec_lead(g, ring, ord)?;
    if pf != pg {
        return None;
    }
    let field = ring.field();
    let u = mf.lcm(mg, ring.weights());
    let inv_f = field.inv(cf).expect("nonzero lead");
    let inv_g = field.inv(cg).expect("nonzero lead");
    let a = f.term_mul(&u.div(mf), &inv_f);
    let b = g.term_mul(&u.div(mg), &inv_g);
    Some(a.sub(&b).expect("ranks match"))
}

fn normalize_input(gens: &[FreeVec]) -> Vec<FreeVec> {
    let mut out: Vec<FreeVec> = gens.iter().filter(|v| !v.is_zero()).cloned().collect();
    out.sort_by(|a, b| a.cmp_canonical(b));
    out.dedup();
    out
}

/// Buchberger's algorithm with the sugar selection strategy and the coprime
/// (rank-1 only) and chain criteria. Returns the unique reduced basis.
pub fn buchberger_module(
    input: &[FreeVec],
    module: &FreeModule,
    ord: ModOrder,
) -> Result<GBasis> {
    let ring = module.ring.clone();
    for v in input {
        if v.rank() != module.rank() {
            return Err(Error::RankMismatch(v.rank(), module.rank()));
        }
    }
    let mut basis = normalize_input(input);
    for v in basis.iter_mut() {
        let (_, _, c) = vec_lead(v, &ring, &ord).expect("zero generators dropped");
        let inv = ring.field().inv(c)?;
        *v = v.scalar_mul(&inv);
    }

    let sugar_of = |v: &FreeVec| -> i64 { v.max_degree(module).unwrap_or(0) };
    let mut sugars: Vec<i64> = basis.iter().map(sugar_of).collect();
    let leads: &mut Vec<(usize, Monomial)> = &mut basis
        .iter()
        .map(|v| {
            let (p, m, _) = vec_lead(v, &ring, &ord).unwrap();
            (p, m.clone())
        })
        .collect();

    // queue of (sugar, lcm degree, i, j); min selected first
    let mut queue: BinaryHeap<Reverse<(i64, u64, usize, usize)>> = BinaryHeap::new();
    let mut done: HashSet<(usize, usize)> = HashSet::new();
    let rank1 = module.rank() == 1;

    let push_pairs =
        |queue: &mut BinaryHeap<Reverse<(i64, u64, usize, usize)>>,
         done: &mut HashSet<(usize, usize)>,
         leads: &Vec<(usize, Monomial)>,
         sugars: &Vec<i64>,
         j: usize| {
            for i in 0..j {
                if leads[i].0 != leads[j].0 {
                    continue;
                }
                if rank1 && leads[i].1.coprime(&leads[j].1) {
                    done.insert((i, j));
                    continue;
                }
                let u = leads[i].1.lcm(&leads[j].1, module.ring.weights());
                let du = u.degree() as u64;
                let s = (sugars[i] + (u.degree() - leads[i].1.degree()) as i64)
                    .max(sugars[j] + (u.degree() - leads[j].1.degree()) as i64);
                queue.push(Reverse((s, du, i, j)));
            }
        };

    for j in 0..basis.len() {
        push_pairs(&mut queue, &mut done, leads, &sugars, j);
    }

    while let Some(Reverse((sug, _, i, j))) = queue.pop() {
        if done.contains(&(i, j)) {
            continue;
        }
        done.insert((i, j));
        // chain criterion
        let u = leads[i].1.lcm(&leads[j].1, ring.weights());
        let pos = leads[i].0;
        let mut chained = false;
        for (k, (kp, km)) in leads.iter().enumerate() {
            if k == i || k == j || *kp != pos {
                continue;
            }
            if km.divides(&u) {
                let a = (i.min(k), i.max(k));
                let b = (j.min(k), j.max(k));
                if done.contains(&a) && done.contains(&b) {
                    chained = true;
                    break;
                }
            }
        }
        if chained {
            continue;
        }
        let s = s_vector(&basis[i], &basis[j], &ring, &ord).expect("same lead component");
        let nf = normal_form_vec(&s, &basis, &ring, &ord);
        if nf.is_zero() {
            continue;
        }
        let (_, _, c) = vec_lead(&nf, &ring, &ord).unwrap();
        let inv = ring.field().inv(c)?;
        let nf = nf.scalar_mul(&inv);
        let (p, m, _) = vec_lead(&nf, &ring, &ord).unwrap();
        leads.push((p, m.clone()));
        sugars.push(sug.max(sugar_of(&nf)));
        basis.push(nf);
        let j_new = basis.len() - 1;
        push_pairs(&mut queue, &mut done, leads, &sugars, j_new);
    }

    let out = reduce_basis(basis, module, ord);
    if cfg!(debug_assertions) {
        // post: every input generator reduces to zero against the basis
        for g in input {
            let nf = normal_form_vec(g, &out.gens, &ring, &out.ord);
            assert!(nf.is_zero(), "input generator escaped its own basis");
        }
    }
    Ok(out)
}

fn reduce_basis(mut basis: Vec<FreeVec>, module: &FreeModule, ord: ModOrder) -> GBasis {
    let ring = module.ring.clone();
    // drop generators whose lead is divisible by another surviving lead
    let leads: Vec<(usize, Monomial)> = basis
        .iter()
        .map(|v| {
            let (p, m, _) = vec_lead(v, &ring, &ord).unwrap();
            (p, m.clone())
        })
        .collect();
    let n = basis.len();
    let mut keep = vec![true; n];
    for i in 0..n {
        for j in 0..n {
            if i == j || !keep[j] {
                continue;
            }
            if leads[j].0 == leads[i].0 && leads[j].1.divides(&leads[i].1) {
                if leads[j].1 == leads[i].1 && j > i {
                    continue; // equal leads: lower index survives
                }
                keep[i] = false;
                break;
            }
        }
    }
    let mut kept: Vec<FreeVec> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(v, k)| k.then_some(v))
        .collect();

    // tail-reduce each element against the others
    for i in 0..kept.len() {
        let others: Vec<FreeVec> = kept
            .iter()
            .enumerate()
            .filter(|&(j, _v)| j != i).map(|(_j, v)| v.clone())
            .collect();
        let nf = normal_form_vec(&kept[i], &others, &ring, &ord);
        debug_assert!(!nf.is_zero(), "minimal basis element reduced to zero");
        let (_, _, c) = vec_lead(&nf, &ring, &ord).unwrap();
        let inv = ring.field().inv(c).expect("nonzero lead");
        kept[i] = nf.scalar_mul(&inv);
    }

    kept.sort_by(|a, b| {
        let (pa, ma, _) = vec_lead(a, &ring, &ord).unwrap();
        let (pb, mb, _) = vec_lead(b, &ring, &ord).unwrap();
        ord.cmp_terms(&ring, (mb, pb), (ma, pa))
    });
    GBasis { module: module.clone(), ord, gens: kept }
}

/// Reduced Gröbner basis of an ideal.
pub fn buchberger_ideal(gens: &[Poly], ring: &Ring) -> Result<GBasis> {
    let module = FreeModule::new(ring.clone(), 1);
    let vecs: Vec<FreeVec> = gens.iter().map(|p| module.from_poly(p.clone())).collect();
    buchberger_module(&vecs, &module, ModOrder::Top)
}

/// Normal form of a polynomial against an ideal basis.
pub fn normal_form_poly(f: &Poly, gb: &GBasis) -> Result<Poly> {
    if gb.module.rank() != 1 {
        return Err(Error::RankMismatch(1, gb.module.rank()));
    }
    let v = gb.module.from_poly(f.clone());
    Ok(gb.normal_form(&v)?.comps.into_iter().next().unwrap())
}

/// Generators of `I ∩ k[remaining variables]`, for `I` spanned by `gens`.
/// Returns the ring on the remaining variables (grevlex) and the generators.
pub fn eliminate(gens: &[Poly], ring: &Ring, drop: &[usize]) -> Result<(Ring, Vec<Poly>)> {
    let nv = ring.nvars();
    let dropset: HashSet<usize> = drop.iter().copied().collect();
    let keep: Vec<usize> = (0..nv).filter(|i| !dropset.contains(i)).collect();

    // permuted ring: dropped block first
    let mut perm: Vec<usize> = drop.to_vec();
    perm.extend(&keep);
    let vars: Vec<String> = perm.iter().map(|&i| ring.vars()[i].clone()).collect();
    let weights: Vec<u32> = perm.iter().map(|&i| ring.weights()[i]).collect();
    let elim_ring = Ring::new(
        ring.field().clone(),
        vars,
        weights,
        MonomialOrder::Block { head: drop.len() },
    )?;
    // var_map: original index -> permuted index
    let mut var_map = vec![0usize; nv];
    for (new, &old) in perm.iter().enumerate() {
        var_map[old] = new;
    }
    let mapped: Vec<Poly> = gens.iter().map(|p| p.map_vars(&elim_ring, &var_map)).collect();
    let gb = buchberger_ideal(&mapped, &elim_ring)?;

    let result_ring = Ring::new(
        ring.field().clone(),
        keep.iter().map(|&i| ring.vars()[i].clone()).collect(),
        keep.iter().map(|&i| ring.weights()[i]).collect(),
        MonomialOrder::Grevlex,
    )?;
    // permuted index -> result index (dropped vars must not occur)
    let k = drop.len();
    let mut out = Vec::new();
    for g in &gb.gens {
        let p = &g.comps[0];
        let t_free = p
            .terms()
            .iter()
            .all(|(m, _)| m.exps()[..k].iter().all(|&e| e == 0));
        if t_free {
            let stripped = Poly::from_terms(
                &result_ring,
                p.terms()
                    .iter()
                    .map(|(m, c)| {
                        let exps: Vec<u32> = m.exps()[k..].to_vec();
                        (Monomial::new(exps, result_ring.weights()), c.clone())
                    })
                    .collect(),
            );
            out.push(stripped);
        }
    }
    Ok((result_ring, out))
}

/// Syzygies of the map defined by `columns` into `target`: returns generators
/// of the kernel submodule of the free module with one basis element per
/// column. Requires homogeneous columns; the tag shifts are their degrees.
pub fn syzygies(columns: &[FreeVec], target: &FreeModule) -> Result<(FreeModule, Vec<FreeVec>)> {
    let ring = target.ring.clone();
    let r = target.rank();
    let s = columns.len();
    let mut tag_shifts = Vec::with_capacity(s);
    for (i, c) in columns.iter().enumerate() {
        if c.rank() != r {
            return Err(Error::RankMismatch(c.rank(), r));
        }
        let d = c.homogeneous_degree(target).map_err(|_| {
            Error::GradingError(format!("column {i} of the syzygy input is not homogeneous"))
        })?;
        tag_shifts.push(d.unwrap_or(0));
    }
    let mut shifts = target.shifts.clone();
    shifts.extend(&tag_shifts);
    let big = FreeModule::with_shifts(ring.clone(), shifts);

    let gens: Vec<FreeVec> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut comps = c.comps.clone();
            comps.extend((0..s).map(|j| if j == i { ring.one() } else { ring.zero() }));
            FreeVec { comps }
        })
        .collect();

    let gb = buchberger_module(&gens, &big, ModOrder::PosElim { split: r })?;

    let syz_module = FreeModule::with_shifts(ring.clone(), tag_shifts);
    let mut out = Vec::new();
    for g in &gb.gens {
        if g.comps[..r].iter().all(|p| p.is_zero()) {
            out.push(FreeVec { comps: g.comps[r..].to_vec() });
        }
    }
    // certificate: applying the map to each syzygy gives zero
    for z in &out {
        let mut acc = target.zero_vec();
        for (i, coeff) in z.comps.iter().enumerate() {
            acc = acc.add(&columns[i].poly_mul(coeff)?)?;
        }
        assert!(acc.is_zero(), "syzygy certificate failed");
    }
    Ok((syz_module, out))
}

/// Intersection `U ∩ V` of two submodules of `module`, via the
/// auxiliary-variable trick: eliminate t from `t·U + (1-t)·V`.
pub fn intersect_modules(
    a: &[FreeVec],
    b: &[FreeVec],
    module: &FreeModule,
) -> Result<Vec<FreeVec>> {
    let ring = &module.ring;
    let nv = ring.nvars();
    let mut vars = vec!["@t".to_string()];
    vars.extend(ring.vars().iter().cloned());
    let mut weights = vec![1u32];
    weights.extend(ring.weights());
    let ext = Ring::new(ring.field().clone(), vars, weights, MonomialOrder::Block { head: 1 })?;
    let var_map: Vec<usize> = (1..=nv).collect();

    let lift = |v: &FreeVec| FreeVec {
        comps: v.comps.iter().map(|p| p.map_vars(&ext, &var_map)).collect(),
    };
    let t = ext.var(0);
    let one_minus_t = ext.one().sub(&t)?;

    let mut gens: Vec<FreeVec> = Vec::new();
    for u in a {
        gens.push(lift(u).poly_mul(&t)?);
    }
    for v in b {
        gens.push(lift(v).poly_mul(&one_minus_t)?);
    }
    let ext_module = FreeModule::with_shifts(ext.clone(), module.shifts.clone());
    let gb = buchberger_module(&gens, &ext_module, ModOrder::Top)?;

    let mut out = Vec::new();
    for g in &gb.gens {
        let t_free = g
            .comps
            .iter()
            .all(|p| p.terms().iter().all(|(m, _)| m.exps()[0] == 0));
        if t_free {
            let comps: Vec<Poly> = g
                .comps
                .iter()
                .map(|p| {
                    Poly::from_terms(
                        ring,
                        p.terms()
                            .iter()
                            .map(|(m, c)| {
                                (Monomial::new(m.exps()[1..].to_vec(), ring.weights()), c.clone())
                            })
                            .collect(),
                    )
                })
                .collect();
            out.push(FreeVec { comps });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::CoeffField;

    fn ring(vars: &[&str]) -> Ring {
        Ring::new(
            CoeffField::default_prime(),
            vars.iter().map(|s| s.to_string()).collect(),
            vec![1; vars.len()],
            MonomialOrder::Grevlex,
        )
        .unwrap()
    }

    #[test]
    fn nf_of_zero_is_zero() {
        let r = ring(&["x", "y"]);
        let gb = buchberger_ideal(&[r.var(0)], &r).unwrap();
        let nf = normal_form_poly(&r.zero(), &gb).unwrap();
        assert!(nf.is_zero());
    }

    #[test]
    fn nf_single_division_step() {
        // NF(x^2, {x^2 - y}) = y under grevlex in k[x,y]
        let r = ring(&["x", "y"]);
        let x2 = r.var(0).mul(&r.var(0)).unwrap();
        let g = x2.sub(&r.var(1)).unwrap();
        let gb = buchberger_ideal(&[g], &r).unwrap();
        assert_eq!(normal_form_poly(&x2, &gb).unwrap(), r.var(1));
    }

    #[test]
    fn buchberger_monomial_ideal_is_own_basis() {
        let r = ring(&["x", "y"]);
        let gb = buchberger_ideal(&[r.var(0), r.var(1)], &r).unwrap();
        assert_eq!(gb.gens.len(), 2);
        let gb2 = buchberger_ideal(&[r.var(0).mul(&r.var(1)).unwrap()], &r).unwrap();
        assert_eq!(gb2.gens.len(), 1);
    }

    #[test]
    fn buchberger_one_spair_reduction() {
        // {u^2 - xy, x} in k[x,y,u]: reduced basis is {x, u^2}
        let r = ring(&["x", "y", "u"]);
        let u2 = r.var(2).mul(&r.var(2)).unwrap();
        let f = u2.sub(&r.var(0).mul(&r.var(1)).unwrap()).unwrap();
        let gb = buchberger_ideal(&[f, r.var(0)], &r).unwrap();
        let rendered: Vec<String> = gb.gens.iter().map(|g| g.comps[0].render()).collect();
        assert!(rendered.contains(&"x".to_string()));
        assert!(rendered.contains(&"u^2".to_string()));
        assert_eq!(gb.gens.len(), 2);
    }

    #[test]
    fn module_basis_of_full_module() {
        let r = ring(&["x", "y"]);
        let m = FreeModule::new(r.clone(), 2);
        let gb = buchberger_module(&[m.basis_vec(0), m.basis_vec(1)], &m, ModOrder::Top).unwrap();
        assert_eq!(gb.gens.len(), 2);
        // membership: (xy, 0) in span{(x,0),(0,y)}
        let diag = vec![
            FreeVec { comps: vec![r.var(0), r.zero()] },
            FreeVec { comps: vec![r.zero(), r.var(1)] },
        ];
        let gb2 = buchberger_module(&diag, &m, ModOrder::Top).unwrap();
        let target = FreeVec { comps: vec![r.var(0).mul(&r.var(1)).unwrap(), r.zero()] };
        assert!(gb2.contains(&target).unwrap());
    }

    #[test]
    fn eliminate_classic_conic() {
        // eliminate t from (t*x - T, t*y - U) -> (x*U - y*T)
        let r = ring(&["t", "x", "y", "T", "U"]);
        let f1 = r.var(0).mul(&r.var(1)).unwrap().sub(&r.var(3)).unwrap();
        let f2 = r.var(0).mul(&r.var(2)).unwrap().sub(&r.var(4)).unwrap();
        let (r2, gens) = eliminate(&[f1, f2], &r, &[0]).unwrap();
        assert_eq!(gens.len(), 1);
        // substitution oracle: plug T = t*x, U = t*y back in and expand to 0
        let xv = r2.var_index("x").unwrap();
        let yv = r2.var_index("y").unwrap();
        let images: Vec<Poly> = r2
            .vars()
            .iter()
            .enumerate()
            .map(|(i, name)| match name.as_str() {
                "T" => r.var(0).mul(&r.var(1)).unwrap(),
                "U" => r.var(0).mul(&r.var(2)).unwrap(),
                _ => {
                    let orig = r.var_index(r2.vars()[i].as_str()).unwrap();
                    r.var(orig)
                }
            })
            .collect();
        let back = gens[0].substitute(&r, &images).unwrap();
        assert!(back.is_zero());
        let _ = (xv, yv);
    }

    #[test]
    fn eliminate_keeps_free_generator() {
        // eliminate y from (x): x survives untouched
        let r = ring(&["x", "y"]);
        let (_, gens) = eliminate(&[r.var(0)], &r, &[1]).unwrap();
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].render(), "x");
    }

    #[test]
    fn eliminate_substitution_parabola() {
        // eliminate t from (x - t, y - t^2) -> (y - x^2), checked via x^2 - y
        let r = ring(&["t", "x", "y"]);
        let f1 = r.var(1).sub(&r.var(0)).unwrap();
        let t2 = r.var(0).mul(&r.var(0)).unwrap();
        let f2 = r.var(2).sub(&t2).unwrap();
        let (r2, gens) = eliminate(&[f1, f2], &r, &[0]).unwrap();
        assert_eq!(gens.len(), 1);
        let x2 = r2.var(0).mul(&r2.var(0)).unwrap();
        let expected = x2.sub(&r2.var(1)).unwrap();
        assert_eq!(gens[0], expected.monic().unwrap());
    }

    #[test]
    fn koszul_syzygy() {
        // F = [x y] over k[x,y]: kernel generated by (y, -x)
        let r = ring(&["x", "y"]);
        let target = FreeModule::new(r.clone(), 1);
        let cols = vec![target.from_poly(r.var(0)), target.from_poly(r.var(1))];
        let (_m, syz) = syzygies(&cols, &target).unwrap();
        assert_eq!(syz.len(), 1);
        let z = &syz[0];
        // up to scalar: (y, -x)
        let y = r.var(1);
        let minus_x = r.var(0).neg();
        assert!(
            (z.comps[0] == y && z.comps[1] == minus_x)
                || (z.comps[0] == y.neg() && z.comps[1] == r.var(0))
        );
    }

    #[test]
    fn identity_matrix_has_no_syzygies() {
        let r = ring(&["x", "y"]);
        let target = FreeModule::new(r.clone(), 2);
        let cols = vec![target.basis_vec(0), target.basis_vec(1)];
        let (_, syz) = syzygies(&cols, &target).unwrap();
        assert!(syz.is_empty());
    }

    #[test]
    fn syzygies_over_quotient_ring_pattern() {
        // F = [x y] over A = k[x,y]/(xy): kernel (with J-columns appended)
        // contains (y, 0) and (0, x) in the projected coordinates
        let r = ring(&["x", "y"]);
        let target = FreeModule::new(r.clone(), 1);
        let xy = r.var(0).mul(&r.var(1)).unwrap();
        let cols = vec![
            target.from_poly(r.var(0)),
            target.from_poly(r.var(1)),
            target.from_poly(xy),
        ];
        let (syz_mod, syz) = syzygies(&cols, &target).unwrap();
        // project to the first two tags and check membership of (y,0) and (0,x)
        let proj_mod = FreeModule::with_shifts(r.clone(), syz_mod.shifts[..2].to_vec());
        let projected: Vec<FreeVec> = syz
            .iter()
            .map(|z| FreeVec { comps: z.comps[..2].to_vec() })
            .collect();
        let gb = buchberger_module(&projected, &proj_mod, ModOrder::Top).unwrap();
        let want1 = FreeVec { comps: vec![r.var(1), r.zero()] };
        let want2 = FreeVec { comps: vec![r.zero(), r.var(0)] };
        assert!(gb.contains(&want1).unwrap());
        assert!(gb.contains(&want2).unwrap());
    }

    #[test]
    fn nf_idempotence_smoke() {
        let r = ring(&["x", "y"]);
        let f = r
            .var(0)
            .mul(&r.var(0))
            .unwrap()
            .add(&r.var(0).mul(&r.var(1)).unwrap())
            .unwrap();
        let g = r.var(0).mul(&r.var(0)).unwrap().sub(&r.var(1)).unwrap();
        let gb = buchberger_ideal(&[g], &r).unwrap();
        let nf1 = normal_form_poly(&f, &gb).unwrap();
        let nf2 = normal_form_poly(&nf1, &gb).unwrap();
        assert_eq!(nf1, nf2);
    }

    #[test]
    fn intersection_of_coordinate_ideals() {
        // (x) ∩ (y) = (xy) in k[x,y]
        let r = ring(&["x", "y"]);
        let m = FreeModule::new(r.clone(), 1);
        let a = vec![m.from_poly(r.var(0))];
        let b = vec![m.from_poly(r.var(1))];
        let inter = intersect_modules(&a, &b, &m).unwrap();
        let gb = buchberger_module(&inter, &m, ModOrder::Top).unwrap();
        assert_eq!(gb.gens.len(), 1);
        assert_eq!(gb.gens[0].comps[0].render(), "x*y");
    }
}
