[closedset]
label = geo2_Jc62
source = Jc62
targets = Jc50 Jc58 Jc65
basis = e1 e2 f1 f2
condition: c[1,2,1] = 0
condition: 2*c[1,1,1]-c[1,2,2]-c[1,3,3]-c[1,4,4] = 0
