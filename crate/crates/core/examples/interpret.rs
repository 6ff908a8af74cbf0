//! Runs C snippets in the reference interpreter.
use ubsmith::minivm::{eval_source, DEFAULT_STEP_LIMIT};

fn main() {
    let programs = [
        "#include <stdio.h>\nint main() {\n  int a[3] = {1, 2, 3};\n  printf(\"%d\\n\", a[0] + a[2]);\n  return 0;\n}\n",
        "int main() {\n  int a[5];\n  int i = 5;\n  a[i] = 1;\n  return 0;\n}\n",
        "#include <limits.h>\nint main() {\n  int x = INT_MAX;\n  x = x + 1;\n  return x;\n}\n",
        "int main() {\n  int x;\n  if (x) {\n    return 1;\n  }\n  return 0;\n}\n",
    ];
    for src in programs {
        println!("{src}=> {:?}\n", eval_source(src, DEFAULT_STEP_LIMIT));
    }
}
