"""Action objects used by the CLI; each returns a {"success": ...} dictionary."""
