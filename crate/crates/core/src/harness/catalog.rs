use std::sync::Arc;

use crate::constructions::{
    hom_from_fn, make_boolean, make_ntrunc, make_product, make_zmod, module_product, module_self, module_zmod_action,
};
use crate::error::Result;
use crate::semimodule::FiniteSemimodule;
use crate::semiring::FiniteSemiring;

use super::instance::Instance;

fn ring(s: Result<FiniteSemiring>) -> Arc<FiniteSemiring> {
    Arc::new(s.expect("catalog parameters are valid"))
}

fn product_instance(name: &str, m1: &FiniteSemimodule, m2: &FiniteSemimodule) -> Instance {
    let p = module_product(m1, m2).expect("catalog product is valid");
    let n1 = m1.size();
    let first = hom_from_fn(&p, m1, |x| x % n1).expect("projection");
    let second = hom_from_fn(&p, m2, |x| x / n1).expect("projection");
    Instance::new(name, p).with_hom("project-1", first).with_hom("project-2", second).with_generated_extras()
}

/// The built-in catalog: eleven semirings, every one acting on itself, cyclic
/// quotient actions and three product modules. All carriers have at most 24 elements.
pub fn default_catalog() -> Vec<Instance> {
    let b = Arc::new(make_boolean());
    let z2 = ring(make_zmod(2));
    let z3 = ring(make_zmod(3));
    let z4 = ring(make_zmod(4));
    let z6 = ring(make_zmod(6));
    let z8 = ring(make_zmod(8));
    let z12 = ring(make_zmod(12));
    let n23 = ring(make_ntrunc(2, 3));
    let n38 = ring(make_ntrunc(3, 8));
    let n320 = ring(make_ntrunc(3, 20));
    let bb = ring(make_product(&b, &b));

    let action = |s: &Arc<FiniteSemiring>, n: usize| module_zmod_action(Arc::clone(s), n).expect("catalog action is valid");
    let own = |name: &str, s: &Arc<FiniteSemiring>| Instance::new(name, module_self(Arc::clone(s))).with_generated_extras();
    let over = |name: &str, s: &Arc<FiniteSemiring>, n: usize| Instance::new(name, action(s, n)).with_generated_extras();

    let z4_self = module_self(Arc::clone(&z4));
    let z2_over_z4 = action(&z4, 2);
    let reduce = hom_from_fn(&z4_self, &z2_over_z4, |x| x % 2).expect("reduction mod 2");

    vec![
        own("B", &b),
        own("Z2", &z2),
        own("Z3", &z3),
        Instance::new("Z4", z4_self).with_hom("reduce-mod-2", reduce).with_generated_extras(),
        over("Z2 over Z4", &z4, 2),
        own("Z6", &z6),
        over("Z3 over Z6", &z6, 3),
        over("Z2 over Z6", &z6, 2),
        own("Z8", &z8),
        over("Z4 over Z8", &z8, 4),
        own("Z12", &z12),
        over("Z6 over Z12", &z12, 6),
        own("N(2,3)", &n23),
        over("Z3 over N(2,3)", &n23, 3),
        own("N(3,8)", &n38),
        over("Z8 over N(3,8)", &n38, 8),
        own("N(3,20)", &n320),
        over("Z20 over N(3,20)", &n320, 20),
        own("BxB", &bb),
        product_instance("BxB over B", &module_self(Arc::clone(&b)), &module_self(Arc::clone(&b))),
        product_instance("Z2xZ2 over Z2", &module_self(Arc::clone(&z2)), &module_self(Arc::clone(&z2))),
        product_instance("Z2xZ4 over Z4", &action(&z4, 2), &module_self(Arc::clone(&z4))),
    ]
}
