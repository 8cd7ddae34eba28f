//! Pipeline for one job: enumerate, act, reduce, then report the requested view.

use anyhow::{anyhow, bail, Context};
use braidtower::braidact::{cusp_orbits, hm_tags, mbar4_orbits, sh_incidence, sh_incidence_general, BraidAction, MOrbit, Reduced};
use braidtower::grouptower::spin_sep_rep;
use braidtower::jline::{branch_cycles, moduli_fineness, monodromy_order};
use braidtower::liftinv::{orbit_invariants, Embedding};
use braidtower::nielsen::{automorphisms_from_generators, enumerate_nielsen, mpr, normalizer_automorphisms, Canon, ClassSpec, HmTag, Mode};
use braidtower::realpts::{conjugation_over_1_inf, is_reflection, real_locus, reduced_kappa, KappaVariant};
use braidtower::{Group, Perm};
use serde_json::{json, Map, Value};

use crate::job::{ClassList, GroupSpec, Loaded};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum View {
    Nielsen,
    Orbits,
    Cusps,
    Shinc,
    Genus,
    Real,
    Lift,
    Monodromy,
}

impl View {
    pub fn name(self) -> &'static str {
        match self {
            View::Nielsen => "nielsen",
            View::Orbits => "orbits",
            View::Cusps => "cusps",
            View::Shinc => "shinc",
            View::Genus => "genus",
            View::Real => "real",
            View::Lift => "lift",
            View::Monodromy => "monodromy",
        }
    }
}

pub struct Job {
    pub group: GroupSpec,
    pub classes: ClassList,
    pub mode: Mode,
    pub nprime: Option<String>,
    pub kappa: Option<KappaVariant>,
    pub budget: u128,
}

pub struct Report {
    pub json: Map<String, Value>,
    pub text: String,
}

struct Level<'a> {
    g: &'a Group,
    canon: Canon<'a>,
    ba: BraidAction,
    tags: Vec<HmTag>,
}

impl<'a> Level<'a> {
    fn build(job: &Job, lg: &'a Loaded, spec: &ClassSpec) -> anyhow::Result<Option<Level<'a>>> {
        let g = lg.group();
        let canon = if job.mode.is_absolute() {
            let autos = match &job.nprime {
                Some(s) => {
                    let n = g.degree().ok_or_else(|| anyhow!("--nprime needs a permutation group"))?;
                    let gens = s.split(',').map(|p| Perm::parse(p.trim(), n)).collect::<Result<Vec<_>, _>>().context("--nprime generators")?;
                    automorphisms_from_generators(g, &gens)?
                }
                None => normalizer_automorphisms(g, Some(spec))?,
            };
            Canon::with_automorphisms(g, autos)
        } else {
            Canon::inner(g)
        };
        let ni = enumerate_nielsen(&canon, spec, job.budget)?;
        if ni.is_empty() {
            return Ok(None);
        }
        let ba = BraidAction::new(&canon, ni)?;
        let tags = if ba.r() >= 3 { hm_tags(g, &ba, lg.projection())? } else { vec![HmTag::None; ba.len()] };
        Ok(Some(Level { g, canon, ba, tags }))
    }

    fn entries(&self, x: u32) -> Vec<String> {
        self.ba.class(x).iter().map(|&e| self.g.label(e)).collect()
    }

    fn reduced(&self) -> anyhow::Result<(Reduced, Vec<MOrbit>)> {
        if self.ba.r() != 4 {
            bail!("reduced classes and j-line covers need four branch cycles, got {}", self.ba.r());
        }
        let red = Reduced::new(&self.ba)?;
        let orbits = mbar4_orbits(&red);
        Ok((red, orbits))
    }
}

pub fn run(job: &Job, view: View) -> anyhow::Result<Report> {
    let lg = job.group.load()?;
    let spec = job.classes.to_spec(&lg)?;
    let lv = Level::build(job, &lg, &spec)?;
    let mut json = Map::new();
    json.insert("schema".into(), json!("braidtower/1"));
    json.insert("command".into(), json!(view.name()));
    json.insert("group".into(), json!(job.group.to_string()));
    json.insert("classes".into(), json!(job.classes.to_string()));
    json.insert("mode".into(), json!(job.mode.as_str()));
    let mut text = format!("{} {} [{}], {}\n", view.name(), job.group, job.classes, job.mode.as_str());
    let Some(lv) = lv else {
        text += "count 0 (empty Nielsen class)\n";
        json.insert("count".into(), json!(0));
        return Ok(Report { json, text });
    };
    let mut put = |k: &str, v: Value| {
        json.insert(k.into(), v);
    };
    match view {
        View::Nielsen => {
            let (count, reps): (usize, Vec<(u32, usize)>) = if job.mode.is_reduced() {
                let (red, _) = lv.reduced()?;
                (red.len(), (0..red.len() as u32).map(|r| (red.members(r)[0], red.members(r).len())).collect())
            } else {
                (lv.ba.len(), (0..lv.ba.len() as u32).map(|x| (x, 1)).collect())
            };
            text += &format!("count {count}\n");
            let list: Vec<Value> = reps
                .iter()
                .map(|&(x, size)| {
                    let entries = lv.entries(x);
                    let m = mpr(lv.g, lv.ba.class(x));
                    let tag = lv.tags[x as usize].as_str();
                    text += &format!("  {}  mpr {m}  {tag}\n", entries.join(", "));
                    let mut v = json!({ "entries": entries, "mpr": m, "hm_tag": tag });
                    if job.mode.is_reduced() {
                        v["qpp_orbit"] = json!(size);
                    }
                    v
                })
                .collect();
            put("count", json!(count));
            put("elements", Value::Array(list));
        }
        View::Orbits => {
            let sizes: Vec<usize> = lv.ba.orbits().iter().map(|o| o.len()).collect();
            text += &format!("{} classes, braid orbits {sizes:?}\n", lv.ba.len());
            put("count", json!(lv.ba.len()));
            put("braid_orbits", json!(sizes));
            if lv.ba.r() == 4 {
                let (red, orbits) = lv.reduced()?;
                let degrees: Vec<usize> = orbits.iter().map(|o| o.degree()).collect();
                text += &format!("{} reduced classes, M4-bar orbits of degree {degrees:?}\n", red.len());
                put("reduced_count", json!(red.len()));
                put("qpp_orbit_sizes", json!(red.qpp_orbit_sizes()));
                put("mbar4_orbits", json!(degrees));
            }
        }
        View::Cusps => {
            let (red, orbits) = lv.reduced()?;
            let mut out = Vec::new();
            for (i, o) in orbits.iter().enumerate() {
                let cusps = cusp_orbits(lv.g, &lv.ba, &red, o, Some(&lv.tags))?;
                text += &format!("orbit {i} (degree {}): {} cusps\n", o.degree(), cusps.len());
                for c in &cusps {
                    text += &format!("  {} width {} {}\n", c.label(), c.elements.len(), c.hm_tag.as_str());
                }
                let list: Vec<Value> =
                    cusps.iter().map(|c| json!({ "label": c.label(), "u": c.u, "v": c.v, "a": c.a, "width": c.elements.len(), "hm_tag": c.hm_tag.as_str() })).collect();
                out.push(json!({ "degree": o.degree(), "cusps": list }));
            }
            put("orbits", Value::Array(out));
        }
        View::Shinc => {
            let mut out = Vec::new();
            if lv.ba.r() == 4 {
                let (red, orbits) = lv.reduced()?;
                for (i, o) in orbits.iter().enumerate() {
                    let sh = sh_incidence(o, &cusp_orbits(lv.g, &lv.ba, &red, o, Some(&lv.tags))?);
                    text += &format!("orbit {i} (degree {})\n{}", o.degree(), sh.to_table());
                    out.push(json!({ "degree": o.degree(), "labels": sh.labels, "matrix": sh.matrix }));
                }
            } else {
                // cusps as q2 cycles on inner classes
                let sh = sh_incidence_general(&lv.ba, 2)?;
                text += &sh.to_table();
                out.push(json!({ "degree": lv.ba.len(), "labels": sh.labels, "matrix": sh.matrix }));
            }
            put("orbits", Value::Array(out));
        }
        View::Genus => {
            let (red, orbits) = lv.reduced()?;
            let mut out = Vec::new();
            for (i, o) in orbits.iter().enumerate() {
                let c = branch_cycles(o)?;
                let fine = moduli_fineness(&red, o);
                text += &format!("orbit {i}: degree {} genus {} cusp widths {:?} tr(gamma_0) {} tr(gamma_1) {} {fine:?}\n", c.degree, c.genus, c.cusp_widths, c.tr0, c.tr1);
                out.push(json!({ "degree": c.degree, "genus": c.genus, "cusp_widths": c.cusp_widths, "tr0": c.tr0, "tr1": c.tr1, "fineness": fine }));
            }
            put("genera", json!(out.iter().map(|o| o["genus"].clone()).collect::<Vec<_>>()));
            put("orbits", Value::Array(out));
        }
        View::Real => {
            let (red, orbits) = lv.reduced()?;
            let (v, c) = match job.kappa {
                Some(v) => (v, reduced_kappa(&lv.canon, &lv.ba, &red, v)?),
                None => conjugation_over_1_inf(&lv.canon, &lv.ba, &red)?,
            };
            let k2 = reduced_kappa(&lv.canon, &lv.ba, &red, KappaVariant::K2)?;
            if !is_reflection(&c, &red) {
                bail!("khat(r1 = {}, r2 = {}) does not reverse gamma_1 and gamma_inf, so it is not the conjugation over (1,inf)", v.r1, v.r2);
            }
            text += &format!("conjugation khat(r1 = {}, r2 = {})\n", v.r1, v.r2);
            let mut out = Vec::new();
            for (i, o) in orbits.iter().enumerate() {
                let rl = real_locus(o, &c, &k2)?;
                let counts = [rl.over_1_inf.len(), rl.over_0_1.len(), rl.over_minf_0.len()];
                text += &format!("orbit {i}: real points over (1,inf) {}, (0,1) {}, (-inf,0) {}; {} components\n", counts[0], counts[1], counts[2], rl.components);
                out.push(json!({ "degree": o.degree(), "over_1_inf": counts[0], "over_0_1": counts[1], "over_minf_0": counts[2], "components": rl.components }));
            }
            put("kappa", json!(v));
            put("orbits", Value::Array(out));
        }
        View::Lift => {
            let rep = lg.g1.as_ref().map(spin_sep_rep).transpose()?;
            let emb = match &rep {
                Some(r) => Embedding::SpinSep(r, lg.via.as_deref()),
                None => Embedding::Standard,
            };
            let (_, orbs) = orbit_invariants(lv.g, &lv.ba, emb)?;
            text += &format!("embedding {}\n", emb.name());
            for o in &orbs {
                text += &format!("  braid orbit of {}: invariant {:+}{}\n", o.size, o.invariant, if o.obstructed { " (obstructed)" } else { "" });
            }
            put("embedding", json!(emb.name()));
            put("braid_orbits", json!(orbs.iter().map(|o| json!({ "size": o.size, "invariant": o.invariant, "obstructed": o.obstructed })).collect::<Vec<_>>()));
        }
        View::Monodromy => {
            let (_, orbits) = lv.reduced()?;
            let mut out = Vec::new();
            for (i, o) in orbits.iter().enumerate() {
                let m = monodromy_order(&branch_cycles(o)?)?;
                text += &format!("orbit {i}: degree {} monodromy group order {m}\n", o.degree());
                out.push(json!({ "degree": o.degree(), "order": m.to_string() }));
            }
            put("orbits", Value::Array(out));
        }
    }
    Ok(Report { json, text })
}
