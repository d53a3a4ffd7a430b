# Tautological ring calculator package
