//! Character tables of cyclic, dihedral and generalized quaternion groups.
//!
//! Classes come in the order 1, a^t (even cases), a, a^2, …, then the
//! reflection-type classes b and ab. Rows are named `chi1`…`chi4` for the
//! linear characters and `psi1`, `psi2`, … for the degree-2 ones.

use num_integer::gcd;

use crate::cyclo::Cyclotomic;

use super::{CharacterTable, ClassData, Row, TableError};

fn root(n: u32, k: i64) -> Cyclotomic {
    Cyclotomic::root_of_unity(n, k).expect("family conductors are small")
}

/// ω^{k} + ω^{-k} with ω = e^{2πi/n}.
fn two_cos(n: u32, k: i64) -> Cyclotomic {
    Cyclotomic::sum_of_roots(n, [k, -k]).expect("family conductors are small")
}

fn sign(e: u32) -> Cyclotomic {
    Cyclotomic::from_integer(if e.is_multiple_of(2) { 1 } else { -1 })
}

fn power_label(r: u32) -> String {
    match r {
        0 => "1".to_string(),
        1 => "a".to_string(),
        _ => format!("a^{r}"),
    }
}

/// Label of the class containing a^e in `dihedral_table(m)` or
/// `quaternion_table(m / 2)`, where a has order m.
pub fn rotation_label(m: u32, e: i64) -> String {
    let r = e.rem_euclid(m as i64) as u32;
    power_label(r.min(m - r))
}

/// Table of the cyclic group ⟨a⟩ of order m; row `lambdaj` is a^r ↦ ζ_m^{jr}.
pub fn cyclic_table(m: u32) -> Result<CharacterTable, TableError> {
    if m == 0 {
        return Err(TableError::Parameter("cyclic group order must be at least 1".into()));
    }
    let classes = (0..m).map(|r| ClassData::new(power_label(r), 1).with_order((m / gcd(r, m)) as u64)).collect();
    let rows = (0..m)
        .map(|j| Row { name: format!("lambda{j}"), values: (0..m).map(|r| root(m, (j as i64) * (r as i64))).collect() })
        .collect();
    CharacterTable::new(format!("C{m}"), m as u64, classes, "1", rows, true)
}

/// Table of the dihedral group D_2m = ⟨a, b | a^m = b^2 = 1, b⁻¹ab = a⁻¹⟩.
pub fn dihedral_table(m: u32) -> Result<CharacterTable, TableError> {
    if m < 3 {
        return Err(TableError::Parameter(format!("dihedral tables need m >= 3, got {m}")));
    }
    if m % 2 == 1 {
        return Ok(odd_dihedral(m));
    }
    Ok(even_family(m, Kind::Dihedral))
}

/// Table of the generalized quaternion group Q_4t = ⟨a, b | a^{2t} = 1, a^t = b^2, b⁻¹ab = a⁻¹⟩.
pub fn quaternion_table(t: u32) -> Result<CharacterTable, TableError> {
    if t < 2 {
        return Err(TableError::Parameter(format!("quaternion tables need t >= 2, got {t}")));
    }
    Ok(even_family(2 * t, Kind::Quaternion))
}

fn odd_dihedral(m: u32) -> CharacterTable {
    let half = (m - 1) / 2;
    let mut classes = vec![ClassData::new("1", 1).with_order(1)];
    classes.extend((1..=half).map(|r| ClassData::new(power_label(r), 2).with_order((m / gcd(r, m)) as u64)));
    classes.push(ClassData::new("b", m as u64).with_order(2));

    let one = Cyclotomic::one();
    let mut rows = vec![
        Row { name: "chi1".into(), values: vec![one.clone(); classes.len()] },
        Row {
            name: "chi2".into(),
            values: std::iter::repeat_n(one.clone(), half as usize + 1).chain([Cyclotomic::from_integer(-1)]).collect(),
        },
    ];
    for j in 1..=half {
        let mut values = vec![Cyclotomic::from_integer(2)];
        values.extend((1..=half).map(|r| two_cos(m, (j * r) as i64)));
        values.push(Cyclotomic::zero());
        rows.push(Row { name: format!("psi{j}"), values });
    }
    CharacterTable::new(format!("D{}", 2 * m), 2 * m as u64, classes, "1", rows, true)
        .expect("constructed table is well formed")
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Dihedral,
    Quaternion,
}

fn even_family(m: u32, kind: Kind) -> CharacterTable {
    let t = m / 2;
    let reflection_order = if kind == Kind::Dihedral { 2 } else { 4 };
    let mut classes = vec![ClassData::new("1", 1).with_order(1), ClassData::new(power_label(t), 1).with_order(2)];
    classes.extend((1..t).map(|r| ClassData::new(power_label(r), 2).with_order((m / gcd(r, m)) as u64)));
    classes.push(ClassData::new("b", t as u64).with_order(reflection_order));
    classes.push(ClassData::new("ab", t as u64).with_order(reflection_order));

    let one = Cyclotomic::one();
    let minus = Cyclotomic::from_integer(-1);
    // value of χ3, χ4 on a^t and on b
    let (at, on_b) = match kind {
        Kind::Dihedral => (sign(t), one.clone()),
        Kind::Quaternion if t % 2 == 1 => (minus.clone(), root(4, 1)),
        Kind::Quaternion => (one.clone(), one.clone()),
    };
    let linear = |name: &str, rot_sign: bool, b: Cyclotomic, ab: Cyclotomic| {
        let mut values = vec![one.clone(), if rot_sign { at.clone() } else { one.clone() }];
        values.extend((1..t).map(|r| if rot_sign { sign(r) } else { one.clone() }));
        values.push(b);
        values.push(ab);
        Row { name: name.into(), values }
    };
    let mut rows = vec![
        linear("chi1", false, one.clone(), one.clone()),
        linear("chi2", false, minus.clone(), minus.clone()),
        linear("chi3", true, on_b.clone(), -&on_b),
        linear("chi4", true, -&on_b, on_b.clone()),
    ];
    for j in 1..t {
        let mut values = vec![Cyclotomic::from_integer(2), Cyclotomic::from_integer(2).mul(&sign(j))];
        values.extend((1..t).map(|r| two_cos(m, (j * r) as i64)));
        values.push(Cyclotomic::zero());
        values.push(Cyclotomic::zero());
        rows.push(Row { name: format!("psi{j}"), values });
    }
    let name = match kind {
        Kind::Dihedral => format!("D{}", 2 * m),
        Kind::Quaternion => format!("Q{}", 2 * m),
    };
    CharacterTable::new(name, 2 * m as u64, classes, "1", rows, true).expect("constructed table is well formed")
}
