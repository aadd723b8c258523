//! Reproducible random streams. Each (root seed, operation, point, replicate)
//! tuple maps to its own ChaCha stream, so parallel work never shares state.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Stream for one replicate of one operation at one evaluation point.
pub fn derive_stream(root: u64, op: u64, point: u64, replicate: u64) -> ChaCha8Rng {
    let key = splitmix(splitmix(splitmix(root) ^ op) ^ point);
    let mut rng = ChaCha8Rng::seed_from_u64(key);
    rng.set_stream(replicate);
    rng
}

/// Stable tag for an operation name.
pub fn op_tag(name: &str) -> u64 {
    // FNV-1a
    name.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}
