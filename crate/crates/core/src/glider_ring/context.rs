//! Group contexts (character data plus intertwiner caches) and the products,
//! restrictions and inductions of glider keys.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::key::{Components, GliderKey};
use crate::error::{Error, Result};
use crate::exact_linear::{CycMatrix, CycScalar};
use crate::group_core::{subgroup_lattice, FiniteGroup, Subgroup, SubgroupLattice};
use crate::rep_theory::{intertwiners, RepData};

/// Intertwiner bases towards each target irreducible, with the target index.
type HomBases = Arc<Vec<(usize, Vec<CycMatrix>)>>;

/// One group (the root or a subgroup of it) with its representation data.
#[derive(Debug)]
pub struct GroupContext {
    pub rep: RepData,
    /// `root_elements[g]` is the root-group index of local element `g`; sorted.
    pub root_elements: Vec<usize>,
    lattice: OnceLock<Result<SubgroupLattice>>,
    tensor_cache: Mutex<HashMap<(usize, usize), HomBases>>,
    product_cache: Mutex<HashMap<(GliderKey, GliderKey), GliderKey>>,
}

impl GroupContext {
    fn new(rep: RepData, root_elements: Vec<usize>) -> Self {
        GroupContext {
            rep,
            root_elements,
            lattice: OnceLock::new(),
            tensor_cache: Mutex::new(HashMap::new()),
            product_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.rep.group
    }

    pub fn order(&self) -> usize {
        self.rep.order()
    }

    /// Subgroup lattice of this group, in local indices.
    pub fn lattice(&self) -> Result<&SubgroupLattice> {
        self.lattice
            .get_or_init(|| subgroup_lattice(&self.rep.group, usize::MAX))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Converts a local subgroup to sorted root indices.
    pub fn to_root(&self, local: &Subgroup) -> Vec<usize> {
        let mut v: Vec<usize> = local.elements.iter().map(|&g| self.root_elements[g]).collect();
        v.sort_unstable();
        v
    }

    /// Converts sorted root indices of a subset of this group to local indices.
    pub fn to_local(&self, root: &[usize]) -> Result<Subgroup> {
        let local = root
            .iter()
            .map(|g| {
                self.root_elements
                    .binary_search(g)
                    .map_err(|_| Error::NotContained("element outside the group".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Subgroup::new(local))
    }

    /// Bases of `Hom_G(V_i ⊗ V_j, V_k)` for every constituent `V_k`.
    fn tensor_homs(&self, i: usize, j: usize) -> HomBases {
        if let Some(h) = self.tensor_cache.lock().expect("cache lock").get(&(i, j)) {
            return h.clone();
        }
        let rep = &self.rep;
        let (di, dj) = (rep.dim(i), rep.dim(j));
        let bases: Vec<(usize, Vec<CycMatrix>)> = rep
            .tensor_decompose(i, j)
            .into_iter()
            .map(|(k, mult)| {
                let basis = intertwiners(
                    rep.conductor,
                    &rep.generators,
                    |g| rep.tensor_matrix(i, j, g),
                    |g| rep.irreps[k].matrices[g].clone(),
                    di * dj,
                    rep.dim(k),
                );
                debug_assert_eq!(basis.len(), mult);
                (k, basis)
            })
            .collect();
        let bases = Arc::new(bases);
        self.tensor_cache.lock().expect("cache lock").insert((i, j), bases.clone());
        bases
    }

    /// Product `[Km ⊆ M]·[Kn ⊆ N] = [K(m⊗n) ⊆ K[G](m⊗n)]`.
    pub fn product(&self, x: &GliderKey, y: &GliderKey) -> GliderKey {
        if x.is_zero() || y.is_zero() {
            return GliderKey::zero();
        }
        let (x, y) = if x <= y { (x, y) } else { (y, x) };
        if x.b.is_empty() && y.b.is_empty() {
            let lin = &self.rep.linear;
            return GliderKey::from_linear_set(
                x.a.iter().flat_map(|&z| y.a.iter().map(move |&w| lin.product(z, w))),
            );
        }
        let cache_key = (x.clone(), y.clone());
        if let Some(p) = self.product_cache.lock().expect("cache lock").get(&cache_key) {
            return p.clone();
        }
        let result = self.product_uncached(x, y);
        self.product_cache.lock().expect("cache lock").insert(cache_key, result.clone());
        result
    }

    fn product_uncached(&self, x: &GliderKey, y: &GliderKey) -> GliderKey {
        let rep = &self.rep;
        let e = rep.conductor;
        let cx = x.components(rep);
        let cy = y.components(rep);
        let mut out = Components::new();
        for (&i, us) in &cx {
            for (&j, ws) in &cy {
                if let (Some(z), Some(w)) = (rep.irrep_to_linear[i], rep.irrep_to_linear[j]) {
                    let k = rep.linear_to_irrep[rep.linear.product(z, w)];
                    out.entry(k).or_default().push(vec![CycScalar::one(e)]);
                    continue;
                }
                let homs = self.tensor_homs(i, j);
                for u in us {
                    for w in ws {
                        let t: Vec<CycScalar> =
                            u.iter().flat_map(|a| w.iter().map(move |b| a * b)).collect();
                        for (k, basis) in homs.iter() {
                            let rows = out.entry(*k).or_default();
                            for xmat in basis {
                                rows.push(xmat.apply(&t).expect("intertwiner shape"));
                            }
                        }
                    }
                }
            }
        }
        GliderKey::from_components(rep, out).expect("component rows have model dimension")
    }

    /// Whether `x·x = x`.
    pub fn is_idempotent(&self, x: &GliderKey) -> bool {
        &self.product(x, x) == x
    }
}

/// Intertwiners between a group and one of its subgroups.
#[derive(Debug)]
pub struct Inclusion {
    pub big: Arc<GroupContext>,
    pub small: Arc<GroupContext>,
    /// `embedding[h]` = big-local index of small-local element `h`.
    pub embedding: Vec<usize>,
    res_cache: Mutex<HashMap<usize, HomBases>>,
    ind_cache: Mutex<HashMap<usize, HomBases>>,
}

impl Inclusion {
    fn new(big: Arc<GroupContext>, small: Arc<GroupContext>) -> Result<Self> {
        let embedding = small
            .root_elements
            .iter()
            .map(|g| {
                big.root_elements
                    .binary_search(g)
                    .map_err(|_| Error::NotContained("subgroup is not contained in the group".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Inclusion { big, small, embedding, res_cache: Mutex::new(HashMap::new()), ind_cache: Mutex::new(HashMap::new()) })
    }

    fn small_generators_in_big(&self) -> (Vec<usize>, Vec<usize>) {
        let gens = self.small.rep.generators.clone();
        let big: Vec<usize> = gens.iter().map(|&h| self.embedding[h]).collect();
        (gens, big)
    }

    /// Bases of `Hom_H(Res V_i, W_k)` for the constituents `W_k` of `Res V_i`.
    fn restriction_homs(&self, i: usize) -> HomBases {
        if let Some(h) = self.res_cache.lock().expect("cache lock").get(&i) {
            return h.clone();
        }
        let (brep, srep) = (&self.big.rep, &self.small.rep);
        let res = brep.restrict_character(&brep.characters[i], srep, &self.embedding);
        let (gens, _) = self.small_generators_in_big();
        let bases: Vec<(usize, Vec<CycMatrix>)> = srep
            .decompose_character(&res)
            .into_iter()
            .map(|(k, _)| {
                let basis = intertwiners(
                    brep.conductor,
                    &gens,
                    |h| brep.irreps[i].matrices[self.embedding[h]].clone(),
                    |h| srep.irreps[k].matrices[h].clone(),
                    brep.dim(i),
                    srep.dim(k),
                );
                (k, basis)
            })
            .collect();
        let bases = Arc::new(bases);
        self.res_cache.lock().expect("cache lock").insert(i, bases.clone());
        bases
    }

    /// Bases of `Hom_H(W_k, Res V_i)` for the constituents `V_i` of `Ind W_k`;
    /// by Frobenius reciprocity `X` gives the map `g ⊗ w ↦ ρ_i(g) X w`.
    fn induction_homs(&self, k: usize) -> HomBases {
        if let Some(h) = self.ind_cache.lock().expect("cache lock").get(&k) {
            return h.clone();
        }
        let (brep, srep) = (&self.big.rep, &self.small.rep);
        let ind = brep.induce_character(&srep.characters[k], srep, &self.embedding);
        let (gens, _) = self.small_generators_in_big();
        let bases: Vec<(usize, Vec<CycMatrix>)> = brep
            .decompose_character(&ind)
            .into_iter()
            .map(|(i, _)| {
                let basis = intertwiners(
                    brep.conductor,
                    &gens,
                    |h| srep.irreps[k].matrices[h].clone(),
                    |h| brep.irreps[i].matrices[self.embedding[h]].clone(),
                    srep.dim(k),
                    brep.dim(i),
                );
                (i, basis)
            })
            .collect();
        let bases = Arc::new(bases);
        self.ind_cache.lock().expect("cache lock").insert(k, bases.clone());
        bases
    }

    /// `ℛes`: the key of `(Kv ⊆ K[H]v)` inside the restricted module.
    pub fn restrict(&self, y: &GliderKey) -> GliderKey {
        let mut out = Components::new();
        for (i, us) in y.components(&self.big.rep) {
            for (k, basis) in self.restriction_homs(i).iter() {
                let rows = out.entry(*k).or_default();
                for u in &us {
                    for ymat in basis {
                        rows.push(ymat.apply(u).expect("intertwiner shape"));
                    }
                }
            }
        }
        GliderKey::from_components(&self.small.rep, out).expect("component rows have model dimension")
    }

    /// `ℐnd`: the key of `(K(1⊗v) ⊆ K[G](1⊗v))`.
    pub fn induce(&self, x: &GliderKey) -> GliderKey {
        let mut out = Components::new();
        for (k, us) in x.components(&self.small.rep) {
            for (i, basis) in self.induction_homs(k).iter() {
                let rows = out.entry(*i).or_default();
                for u in &us {
                    for xmat in basis {
                        rows.push(xmat.apply(u).expect("intertwiner shape"));
                    }
                }
            }
        }
        GliderKey::from_components(&self.big.rep, out).expect("component rows have model dimension")
    }
}

/// The root group together with lazily built contexts for its subgroups.
#[derive(Debug)]
pub struct GliderRing {
    root: Arc<GroupContext>,
    contexts: Mutex<HashMap<Vec<usize>, Arc<GroupContext>>>,
    inclusions: Mutex<HashMap<InclusionId, Arc<Inclusion>>>,
}

/// Root indices of `(big, small)`.
type InclusionId = (Vec<usize>, Vec<usize>);

impl GliderRing {
    /// Builds the root context over `Q(ζ_e)` with `e` the exponent of the group.
    pub fn new(group: FiniteGroup) -> Result<Self> {
        let conductor = group.exponent() as u32;
        let order = group.order();
        let rep = RepData::new(group, conductor)?;
        let root = Arc::new(GroupContext::new(rep, (0..order).collect()));
        let mut contexts = HashMap::new();
        contexts.insert(root.root_elements.clone(), root.clone());
        Ok(GliderRing { root, contexts: Mutex::new(contexts), inclusions: Mutex::new(HashMap::new()) })
    }

    pub fn root(&self) -> &Arc<GroupContext> {
        &self.root
    }

    pub fn conductor(&self) -> u32 {
        self.root.rep.conductor
    }

    /// Context of the subgroup with the given sorted root indices.
    pub fn context(&self, root_elements: &[usize]) -> Result<Arc<GroupContext>> {
        if let Some(c) = self.contexts.lock().expect("cache lock").get(root_elements) {
            return Ok(c.clone());
        }
        let group = self.root.rep.group.induced_subgroup(root_elements)?;
        let rep = RepData::new(group, self.conductor())?;
        let ctx = Arc::new(GroupContext::new(rep, root_elements.to_vec()));
        let mut guard = self.contexts.lock().expect("cache lock");
        Ok(guard.entry(root_elements.to_vec()).or_insert(ctx).clone())
    }

    /// Inclusion data for `small ≤ big`.
    pub fn inclusion(&self, big: &Arc<GroupContext>, small: &Arc<GroupContext>) -> Result<Arc<Inclusion>> {
        let id = (big.root_elements.clone(), small.root_elements.clone());
        if let Some(inc) = self.inclusions.lock().expect("cache lock").get(&id) {
            return Ok(inc.clone());
        }
        let inc = Arc::new(Inclusion::new(big.clone(), small.clone())?);
        let mut guard = self.inclusions.lock().expect("cache lock");
        Ok(guard.entry(id).or_insert(inc).clone())
    }

    pub fn restrict(&self, big: &Arc<GroupContext>, small: &Arc<GroupContext>, y: &GliderKey) -> Result<GliderKey> {
        Ok(self.inclusion(big, small)?.restrict(y))
    }

    pub fn induce(&self, small: &Arc<GroupContext>, big: &Arc<GroupContext>, x: &GliderKey) -> Result<GliderKey> {
        Ok(self.inclusion(big, small)?.induce(x))
    }
}
