pub mod bigfixed;
