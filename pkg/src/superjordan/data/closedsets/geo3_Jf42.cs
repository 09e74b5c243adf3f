[closedset]
label = geo3_Jf42
source = Jf42
targets = Jf43 Jf51 Jf57 Jf58
basis = e1 e2 e3 f
condition: A1*A4 = 0
